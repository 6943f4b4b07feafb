import random

import pytest

from commalg import QuiverError
from commalg.randgen import (
    random_poset,
    random_quiver,
    random_sparse_quiver,
    random_tree_quiver,
    random_weights,
)
from commalg.structure import path_components


def test_random_quiver_seeded():
    assert random_quiver(5, 8, 3) == random_quiver(5, 8, 3)
    assert random_quiver(5, 8, 3) != random_quiver(5, 8, 4)


def test_random_quiver_validation():
    with pytest.raises(QuiverError):
        random_quiver(0, 0, 1)
    with pytest.raises(QuiverError):
        random_quiver(2, -1, 1)


def test_random_sparse_quiver_no_duplicate_pairs():
    for seed in range(10):
        q = random_sparse_quiver(4, 10, seed)
        pairs = [(a.source, a.target) for a in q.arrows]
        assert len(set(pairs)) == len(pairs)
    with pytest.raises(QuiverError):
        random_sparse_quiver(2, 5, 0)  # only 4 distinct pairs exist


def test_random_tree_quiver_shape():
    for seed in range(10):
        n = random.Random(seed).randint(1, 9)
        q = random_tree_quiver(n, seed)
        assert len(q.arrows) == n - 1
        # a tree has no directed cycles: every component is a singleton
        assert path_components(q).sizes == (1,) * n


def test_random_poset_axioms_hold():
    for seed in range(10):
        p = random_poset(6, seed)  # Poset.__post_init__ checks the axioms
        assert len(p) == 6
        assert p.le("x1", "x1")


def test_random_weights_nonzero():
    q = random_quiver(4, 9, 0)
    f = random_weights(q, 0)
    assert set(f.weights) == {a.name for a in q.arrows}
    assert all(v != 0 for v in f.weights.values())
    assert random_weights(q, 5).weights == random_weights(q, 5).weights
