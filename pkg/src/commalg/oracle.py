"""Brute-force Hom-space dimensions by truncated path enumeration.

For a vertex pair (v, w) and a cutoff L, take the span of all paths v -> w
of length at most L, and quotient by every representable relation
r (f(p) p - f(q) q) s with p, q parallel and both padded products inside the
cutoff.  The reported dimension is the corank of the relation span.  No
reachability shortcut is consulted: this is the independent check that the
pattern-based algebra is measuring the right thing.

Every relation generator touches at most two coordinates, so the rank is
computed by sparse elimination specialized to two-term relations: a
union-find tracking the ratio between each coordinate and its class root.
A cycle whose accumulated ratio disagrees forces the whole class to zero.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .algebra import CoefficientFunction
from .errors import InternalInvariantError, QuiverError
from .fields import QQ
from .quiver import Path, Quiver, enumerate_paths
from .structure import reachability

__all__ = [
    "DEFAULT_PATH_CAP",
    "GeneralCoefficientTable",
    "TruncatedQuotientReport",
    "truncated_hom_dimension",
    "vertex_nondegeneracy",
    "pattern_report",
    "pattern_equivalence",
]

DEFAULT_PATH_CAP = 20_000


@dataclass(frozen=True)
class GeneralCoefficientTable:
    """Path coefficients: tabulated exceptions over a multiplicative base.

    Any path not listed in ``exceptions`` gets the product of its arrow
    weights.  Listed values must be nonzero and listed paths must be valid
    in the quiver.
    """

    quiver: Quiver
    base: CoefficientFunction
    exceptions: Mapping[Path, Fraction]

    def __post_init__(self):
        cleaned = {}
        for path, value in self.exceptions.items():
            rebuilt = self.quiver.path(path.start, path.arrows)
            if rebuilt != path:
                raise QuiverError(f"path {path!r} is not a path of the quiver")
            value = Fraction(value)
            if value == 0:
                raise QuiverError(f"zero coefficient for path {path!r}")
            cleaned[path] = value
        object.__setattr__(self, "exceptions", cleaned)

    @classmethod
    def trivial(cls, quiver: Quiver) -> "GeneralCoefficientTable":
        return cls(quiver, CoefficientFunction.trivial(), {})

    @classmethod
    def multiplicative(
        cls, quiver: Quiver, f: CoefficientFunction
    ) -> "GeneralCoefficientTable":
        return cls(quiver, f, {})

    def value(self, path: Path) -> Fraction:
        if path in self.exceptions:
            return self.exceptions[path]
        return self.base.value(path)

    @property
    def is_multiplicative(self) -> bool:
        return not self.exceptions


@dataclass(frozen=True)
class TruncatedQuotientReport:
    """Result of one truncated quotient computation."""

    source: str
    target: str
    truncation: int
    path_count: int
    relation_rank: int
    dimension: int
    certified: bool


class _TwoTermRank:
    """Rank of a span of vectors a*e_i - b*e_j via ratio union-find.

    Each class stores x_k = ratio_k * x_root.  A relation a x_i = b x_j
    either merges two classes, is redundant, or (on mismatch) proves the
    class is forced to zero.  rank = n - (number of live classes).
    """

    def __init__(self, n: int, field=QQ):
        self.parent = list(range(n))
        self.ratio = [field.one] * n  # x_i = ratio[i] * x_parent[i]
        self.dead = [False] * n  # meaningful at roots
        self.field = field

    def find(self, i: int) -> int:
        chain = []
        root = i
        while self.parent[root] != root:
            chain.append(root)
            root = self.parent[root]
        acc = self.field.one
        for node in reversed(chain):
            acc = self.ratio[node] * acc
            self.ratio[node] = acc
            self.parent[node] = root
        return root

    def _root_and_ratio(self, i: int) -> tuple[int, object]:
        root = self.find(i)
        return root, self.field.one if i == root else self.ratio[i]

    def relate(self, i: int, j: int, a, b) -> None:
        """Impose a * x_i == b * x_j with a, b nonzero."""
        ri, wi = self._root_and_ratio(i)
        rj, wj = self._root_and_ratio(j)
        if ri == rj:
            if a * wi != b * wj:
                self.dead[ri] = True
            return
        # x_ri = (b wj) / (a wi) * x_rj
        self.parent[ri] = rj
        self.ratio[ri] = (b * wj) / (a * wi)
        self.dead[rj] = self.dead[rj] or self.dead[ri]

    def live_classes(self) -> int:
        roots = {self.find(i) for i in range(len(self.parent))}
        return sum(1 for r in roots if not self.dead[r])

    def rank(self) -> int:
        return len(self.parent) - self.live_classes()


def _bfs_distance(quiver: Quiver, source: str, target: str) -> int | None:
    """Arrow count of a shortest path, or None when unreachable."""
    if source == target:
        return 0
    dist = {source: 0}
    queue = deque([source])
    while queue:
        at = queue.popleft()
        for arrow in quiver.arrows_from[at]:
            if arrow.target not in dist:
                dist[arrow.target] = dist[at] + 1
                if arrow.target == target:
                    return dist[arrow.target]
                queue.append(arrow.target)
    return dist.get(target)


def truncated_hom_dimension(
    quiver: Quiver,
    table: GeneralCoefficientTable,
    source: str,
    target: str,
    truncation: int,
    path_cap: int = DEFAULT_PATH_CAP,
    field=QQ,
) -> TruncatedQuotientReport:
    """Dimension of span(paths source -> target, length <= truncation) / relations."""
    if table.quiver != quiver:
        raise QuiverError("coefficient table belongs to a different quiver")
    if truncation < 0:
        raise QuiverError("truncation must be nonnegative")
    paths = enumerate_paths(quiver, source, target, truncation, cap=path_cap)
    index = {p: k for k, p in enumerate(paths)}
    solver = _TwoTermRank(len(paths), field)

    def coeff(path: Path):
        # nonzero over the rationals is not enough: the value must stay
        # nonzero in the working field
        try:
            return field.nonzero(table.value(path))
        except QuiverError:
            raise QuiverError(
                f"coefficient of {path!r} vanishes in {field.name}"
            ) from None

    if table.is_multiplicative:
        # r (f(p) p - f(q) q) s is a scalar multiple of the plain difference
        # f(rps) rps - f(rqs) rqs, so padding never adds new relations
        first = paths[0] if paths else None
        for other in paths[1:]:
            solver.relate(index[first], index[other], coeff(first), coeff(other))
    else:
        seen: set[tuple[int, int, object]] = set()
        for a in quiver.vertices:
            heads = enumerate_paths(quiver, source, a, truncation, cap=path_cap)
            if not heads:
                continue
            for b in quiver.vertices:
                middles = enumerate_paths(quiver, a, b, truncation, cap=path_cap)
                if len(middles) < 2:
                    continue
                tails = enumerate_paths(quiver, b, target, truncation, cap=path_cap)
                if not tails:
                    continue
                for p, q in combinations(middles, 2):
                    budget = truncation - max(len(p), len(q))
                    if budget < 0:
                        continue
                    fp = coeff(p)
                    fq = coeff(q)
                    for r in heads:
                        if len(r) > budget:
                            continue
                        for s in tails:
                            if len(r) + len(s) > budget:
                                continue
                            i = index[Path(source, r.arrows + p.arrows + s.arrows, target)]
                            j = index[Path(source, r.arrows + q.arrows + s.arrows, target)]
                            if i > j:
                                key = (j, i, fp / fq)
                            else:
                                key = (i, j, fq / fp)
                            if key in seen:
                                continue
                            seen.add(key)
                            solver.relate(i, j, fp, fq)

    rank = solver.rank()
    dimension = len(paths) - rank
    if dimension > 1:
        raise InternalInvariantError(
            f"truncated dimension {dimension} exceeds 1 at "
            f"({source!r}, {target!r}); relations are missing"
        )

    distance = _bfs_distance(quiver, source, target)
    if table.is_multiplicative:
        certified = distance is None or truncation >= distance
    else:
        certified = dimension == 0 and (len(paths) > 0 or distance is None)
    return TruncatedQuotientReport(
        source, target, truncation, len(paths), rank, dimension, certified
    )


def vertex_nondegeneracy(
    quiver: Quiver,
    table: GeneralCoefficientTable,
    truncation: int,
    path_cap: int = DEFAULT_PATH_CAP,
    field=QQ,
) -> bool:
    """Whether every vertex keeps a one-dimensional Hom space to itself."""
    return all(
        truncated_hom_dimension(quiver, table, v, v, truncation, path_cap, field).dimension
        == 1
        for v in quiver.vertices
    )


def pattern_report(
    quiver: Quiver,
    truncation: int,
    table: GeneralCoefficientTable | None = None,
    path_cap: int = DEFAULT_PATH_CAP,
    field=QQ,
) -> list[TruncatedQuotientReport]:
    """Truncated quotient reports for every ordered vertex pair."""
    if table is None:
        table = GeneralCoefficientTable.trivial(quiver)
    return [
        truncated_hom_dimension(quiver, table, v, w, truncation, path_cap, field)
        for v in quiver.vertices
        for w in quiver.vertices
    ]


def pattern_equivalence(
    quiver: Quiver,
    truncation: int,
    path_cap: int = DEFAULT_PATH_CAP,
    field=QQ,
) -> bool:
    """Oracle dimensions (trivial coefficients) against plain reachability.

    Requires truncation >= n so every shortest path fits under the cutoff.
    """
    if truncation < quiver.n:
        raise QuiverError("truncation must be at least the vertex count")
    pattern = reachability(quiver)
    reports = pattern_report(quiver, truncation, path_cap=path_cap, field=field)
    return all(
        report.dimension == int(pattern.at(report.source, report.target))
        for report in reports
    )
