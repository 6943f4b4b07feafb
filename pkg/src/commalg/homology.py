"""Projective resolutions over poset representations and global dimension.

A representation of a finite poset assigns a rational vector space to each
element and a map along each cover, with composites independent of the
route (checked at construction).  Simples are resolved by iterated minimal
projective covers; the number of steps is bounded by the longest chain of
the poset, and the resulting projective dimensions bound the global
dimension.  All linear algebra is exact over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .errors import InternalInvariantError, QuiverError
from .fields import QQ
from .linalg import Mat
from .poset import Poset, hasse

__all__ = [
    "PosetRepresentation",
    "RepMorphism",
    "ProjectiveCover",
    "Resolution",
    "projective",
    "simple",
    "projective_cover",
    "minimal_resolution",
    "projective_dimension",
    "global_dimension",
]


@dataclass(frozen=True)
class PosetRepresentation:
    """Vector spaces on the elements, exact maps along the covers."""

    poset: Poset
    dims: tuple[int, ...]
    maps: Mapping[tuple[int, int], Mat]

    def __post_init__(self):
        m = len(self.poset)
        if len(self.dims) != m or any(d < 0 for d in self.dims):
            raise QuiverError("dims must give one nonnegative size per element")
        covers = set(hasse(self.poset).covers)
        if set(self.maps) != covers:
            raise QuiverError("maps must be keyed by exactly the cover pairs")
        for (i, j), mat in self.maps.items():
            if mat.nrows != self.dims[j] or mat.ncols != self.dims[i]:
                raise QuiverError(
                    f"map for cover ({i}, {j}) has shape {mat.nrows}x{mat.ncols}, "
                    f"expected {self.dims[j]}x{self.dims[i]}"
                )
        self._composites  # noqa: B018  (functoriality is checked eagerly)

    @cached_property
    def _composites(self) -> dict[tuple[int, int], Mat]:
        """Composite map for every related pair; raises if route-dependent."""
        leq = self.poset.leq
        out: dict[tuple[int, int], Mat] = {}
        for i in range(len(self.poset)):
            out[(i, i)] = Mat.identity(self.dims[i])
        for j in self.poset.linear_extension():
            incoming = [pair for pair in self.maps if pair[1] == j]
            for i in range(len(self.poset)):
                if i == j or not leq[i][j]:
                    continue
                candidate = None
                for (y, _) in incoming:
                    if not leq[i][y]:
                        continue
                    via = self.maps[(y, j)] @ out[(i, y)]
                    if candidate is None:
                        candidate = via
                    elif candidate != via:
                        raise QuiverError(
                            f"maps from {self.poset.elements[i]!r} to "
                            f"{self.poset.elements[j]!r} depend on the route"
                        )
                if candidate is None:
                    raise InternalInvariantError("related pair with no cover route")
                out[(i, j)] = candidate
        return out

    def composite(self, i: int, j: int) -> Mat:
        """The map from element i to element j (requires i <= j)."""
        if not self.poset.leq[i][j]:
            raise QuiverError("composite requires related elements")
        return self._composites[(i, j)]

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dims)

    def radical_generators(self, j: int) -> Mat:
        """Columns spanning the radical at j: images of the cover maps into j."""
        blocks = [self.maps[pair] for pair in sorted(self.maps) if pair[1] == j]
        out = Mat(self.dims[j], 0)
        for b in blocks:
            out = out.hstack(b)
        return out


@dataclass(frozen=True)
class RepMorphism:
    """Element-wise linear maps commuting with the structure maps."""

    source: PosetRepresentation
    target: PosetRepresentation
    blocks: tuple[Mat, ...]

    def __post_init__(self):
        if self.source.poset != self.target.poset:
            raise QuiverError("morphism endpoints live over different posets")
        m = len(self.source.poset)
        if len(self.blocks) != m:
            raise QuiverError("one block per element required")
        for i, blk in enumerate(self.blocks):
            if blk.nrows != self.target.dims[i] or blk.ncols != self.source.dims[i]:
                raise QuiverError(f"block {i} has the wrong shape")
        for (i, j), src_map in self.source.maps.items():
            lhs = self.target.maps[(i, j)] @ self.blocks[i]
            rhs = self.blocks[j] @ src_map
            if lhs != rhs:
                raise InternalInvariantError(
                    f"morphism does not commute with the cover ({i}, {j})"
                )

    def is_surjective(self) -> bool:
        return all(
            blk.rank() == self.target.dims[i] for i, blk in enumerate(self.blocks)
        )

    def kernel(self) -> tuple[PosetRepresentation, "RepMorphism"]:
        """Kernel subrepresentation with its inclusion."""
        bases = [blk.kernel_basis() for blk in self.blocks]
        dims = tuple(b.ncols for b in bases)
        maps = {}
        for (i, j), src_map in self.source.maps.items():
            pushed = src_map @ bases[i]
            maps[(i, j)] = bases[j].solve(pushed)
        rep = PosetRepresentation(self.source.poset, dims, maps)
        incl = RepMorphism(rep, self.source, tuple(bases))
        return rep, incl

    def compose(self, inner: "RepMorphism") -> "RepMorphism":
        """self after inner."""
        if inner.target is not self.source and inner.target != self.source:
            raise QuiverError("composition endpoints do not match")
        blocks = tuple(
            self.blocks[i] @ inner.blocks[i] for i in range(len(self.blocks))
        )
        return RepMorphism(inner.source, self.target, blocks)


def projective(poset: Poset, x: str) -> PosetRepresentation:
    """The projective at x: one dimension on every y >= x, identity maps."""
    xi = poset.index[x] if x in poset.index else None
    if xi is None:
        raise QuiverError(f"unknown element {x!r}")
    dims = tuple(1 if poset.leq[xi][j] else 0 for j in range(len(poset)))
    maps = {}
    for (i, j) in hasse(poset).covers:
        maps[(i, j)] = Mat(dims[j], dims[i], [[1]] if dims[i] and dims[j] else None)
    return PosetRepresentation(poset, dims, maps)


def simple(poset: Poset, x: str) -> PosetRepresentation:
    """The simple at x: one dimension at x, zero elsewhere."""
    if x not in poset.index:
        raise QuiverError(f"unknown element {x!r}")
    xi = poset.index[x]
    dims = tuple(1 if j == xi else 0 for j in range(len(poset)))
    maps = {
        (i, j): Mat(dims[j], dims[i]) for (i, j) in hasse(poset).covers
    }
    return PosetRepresentation(poset, dims, maps)


@dataclass(frozen=True)
class ProjectiveCover:
    """A projective cover: multiset of projectives and the surjection."""

    multiset: tuple[tuple[str, int], ...]
    module: PosetRepresentation
    surjection: RepMorphism


def projective_cover(rep: PosetRepresentation) -> ProjectiveCover:
    """Minimal projective cover of a nonzero representation.

    The multiplicity of the projective at x is the dimension of the top
    (the quotient by the radical) at x; generators are lifted to the module
    and propagated along the composite maps.
    """
    if rep.is_zero():
        raise QuiverError("the zero representation has no projective cover")
    poset = rep.poset
    m = len(poset)
    # one summand per chosen lift: (element index, lift column in rep at it)
    summands: list[tuple[int, list]] = []
    counts: dict[int, int] = {}
    for x in range(m):
        if rep.dims[x] == 0:
            continue
        rad = rep.radical_generators(x)
        chosen: list[list] = []
        rank = rad.rank()
        if rank == rep.dims[x]:
            continue
        for c in range(rep.dims[x]):
            unit = [QQ.zero] * rep.dims[x]
            unit[c] = QQ.one
            trial = rad.hstack(Mat.from_columns(chosen + [unit], rep.dims[x]))
            if trial.rank() > rank + len(chosen):
                chosen.append(unit)
                if rank + len(chosen) == rep.dims[x]:
                    break
        counts[x] = len(chosen)
        for col in chosen:
            summands.append((x, col))

    dims = tuple(
        sum(1 for (x, _) in summands if poset.leq[x][y]) for y in range(m)
    )
    covers = hasse(poset).covers
    maps = {}
    for (i, j) in covers:
        at_i = [idx for idx, (x, _) in enumerate(summands) if poset.leq[x][i]]
        at_j = [idx for idx, (x, _) in enumerate(summands) if poset.leq[x][j]]
        mat = Mat(dims[j], dims[i])
        for col, idx in enumerate(at_i):
            mat.rows[at_j.index(idx)][col] = QQ.one
        maps[(i, j)] = mat
    cover_rep = PosetRepresentation(poset, dims, maps)

    blocks = []
    for y in range(m):
        cols = []
        for (x, lift) in summands:
            if not poset.leq[x][y]:
                continue
            image = rep.composite(x, y) @ Mat.from_columns([lift], rep.dims[x])
            cols.append(image.column(0))
        blocks.append(Mat.from_columns(cols, rep.dims[y]))
    surj = RepMorphism(cover_rep, rep, tuple(blocks))
    if not surj.is_surjective():
        raise InternalInvariantError("projective cover fails to surject")
    multiset = tuple(
        (poset.elements[x], counts[x]) for x in sorted(counts) if counts[x]
    )
    return ProjectiveCover(multiset, cover_rep, surj)


@dataclass(frozen=True)
class Resolution:
    """Iterated projective covers of a module, usually a simple.

    maps[0] sends covers[0] onto the module; maps[k] for k >= 1 is the
    composite covers[k] -> kernel -> covers[k-1].  ``verify`` reruns the
    exactness and minimality rank checks from the stored matrices alone.
    """

    module: PosetRepresentation
    covers: tuple[PosetRepresentation, ...]
    multisets: tuple[tuple[tuple[str, int], ...], ...]
    maps: tuple[RepMorphism, ...]

    @property
    def length(self) -> int:
        return len(self.covers) - 1

    def verify(self) -> None:
        poset = self.module.poset
        m = len(poset)
        for k, morphism in enumerate(self.maps):
            target = self.module if k == 0 else self.covers[k - 1]
            for y in range(m):
                blk = morphism.blocks[y]
                if k == 0:
                    # surjectivity onto the module
                    if blk.rank() != target.dims[y]:
                        raise InternalInvariantError(f"cover 0 not onto at {y}")
                else:
                    prev = self.maps[k - 1].blocks[y]
                    composite = prev @ blk
                    if not composite.is_zero():
                        raise InternalInvariantError(
                            f"d{k - 1} after d{k} is nonzero at {y}"
                        )
                    # exactness: im d_k = ker d_{k-1}, by rank count
                    if blk.rank() != target.dims[y] - prev.rank():
                        raise InternalInvariantError(
                            f"homology at step {k - 1}, element {y}"
                        )
                    # minimality: the image lies inside the radical
                    rad = self.covers[k - 1].radical_generators(y)
                    if rad.hstack(blk).rank() != rad.rank():
                        raise InternalInvariantError(
                            f"step {k} is not minimal at element {y}"
                        )
        last = self.maps[-1]
        for y in range(m):
            if last.blocks[y].rank() != last.source.dims[y]:
                raise InternalInvariantError(f"resolution not finished at {y}")


def minimal_resolution(poset: Poset, x: str) -> Resolution:
    """Minimal projective resolution of the simple at x.

    Terminates within longest_chain(poset) cover steps; running past that
    bound means the construction itself is broken.
    """
    target = simple(poset, x)
    bound = poset.longest_chain() + 1
    covers: list[PosetRepresentation] = []
    multisets = []
    maps: list[RepMorphism] = []
    current = target
    inclusion: RepMorphism | None = None
    for _ in range(bound):
        step = projective_cover(current)
        covers.append(step.module)
        multisets.append(step.multiset)
        if inclusion is None:
            maps.append(step.surjection)
        else:
            maps.append(inclusion.compose(step.surjection))
        kernel, incl = step.surjection.kernel()
        if kernel.is_zero():
            return Resolution(target, tuple(covers), tuple(multisets), tuple(maps))
        current, inclusion = kernel, incl
    raise InternalInvariantError(
        f"projective resolution of {x!r} exceeded the chain bound {bound}"
    )


def projective_dimension(poset: Poset, x: str) -> int:
    return minimal_resolution(poset, x).length


def global_dimension(poset: Poset) -> int:
    """Max projective dimension of the simples; bounded by the longest chain."""
    out = max(projective_dimension(poset, x) for x in poset.elements)
    bound = poset.longest_chain()
    if out > bound:
        raise InternalInvariantError(
            f"global dimension {out} exceeds the chain bound {bound}"
        )
    return out
