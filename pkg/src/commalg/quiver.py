"""Finite quivers (directed multigraphs) and their paths."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import QuiverError, TruncationOverflowError

__all__ = [
    "Arrow",
    "Path",
    "Quiver",
    "compose",
    "is_parallel",
    "enumerate_paths",
    "to_dot",
]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A directed walk through a quiver.

    An empty arrow tuple is the length-zero path sitting at ``start``;
    every vertex is a path in its own right.  ``end`` is stored so that
    composition and parallelism need no quiver lookup.
    """

    start: str
    arrows: tuple[str, ...]
    end: str

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __repr__(self) -> str:
        if not self.arrows:
            return f"Path({self.start})"
        return f"Path({self.start}:{'.'.join(self.arrows)}:{self.end})"


class Quiver:
    """A finite directed multigraph with named vertices and arrows.

    Loops and parallel arrows are allowed.  Arrows may carry nonzero
    rational weights; an absent weight means 1.
    """

    def __init__(
        self,
        vertices: Sequence[str],
        arrows: Iterable[Arrow | tuple[str, str, str]] = (),
        weights: Mapping[str, Fraction | int | str] | None = None,
        name: str = "Q",
    ):
        self.name = str(name)
        self.vertices = tuple(vertices)
        if not self.vertices:
            raise QuiverError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex identifiers must be pairwise distinct")
        built = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            if a.source not in self.vertex_index:
                raise QuiverError(f"arrow {a.name!r}: undeclared source vertex {a.source!r}")
            if a.target not in self.vertex_index:
                raise QuiverError(f"arrow {a.name!r}: undeclared target vertex {a.target!r}")
            built.append(a)
        self.arrows = tuple(built)
        seen = set()
        for a in self.arrows:
            if a.name in seen:
                raise QuiverError(f"duplicate arrow identifier {a.name!r}")
            seen.add(a.name)
        cleaned: dict[str, Fraction] = {}
        for arrow_name, value in (weights or {}).items():
            if arrow_name not in seen:
                raise QuiverError(f"weight given for unknown arrow {arrow_name!r}")
            value = Fraction(value)
            if value == 0:
                raise QuiverError(f"arrow {arrow_name!r} has zero weight")
            if value != 1:
                cleaned[arrow_name] = value
        self.weights = cleaned

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _arrows_by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrows_from(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows_by_name[name]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    def weight(self, arrow_name: str) -> Fraction:
        self.arrow(arrow_name)
        return self.weights.get(arrow_name, Fraction(1))

    def check_vertex(self, v: str) -> str:
        if v not in self.vertex_index:
            raise QuiverError(f"unknown vertex {v!r}")
        return v

    def vertex_path(self, v: str) -> Path:
        return Path(self.check_vertex(v), (), v)

    def path(self, start: str, arrow_names: Iterable[str] = ()) -> Path:
        """Build a path from ``start`` along the named arrows, validating chaining."""
        at = self.check_vertex(start)
        names = tuple(arrow_names)
        for nm in names:
            a = self.arrow(nm)
            if a.source != at:
                raise QuiverError(
                    f"arrow {nm!r} starts at {a.source!r}, expected {at!r}"
                )
            at = a.target
        return Path(start, names, at)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return (
            self.name == other.name
            and self.vertices == other.vertices
            and self.arrows == other.arrows
            and self.weights == other.weights
        )

    def __repr__(self) -> str:
        return f"Quiver({self.name!r}, {len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def compose(first: Path, second: Path) -> Path:
    """Concatenate two paths; the first must end where the second starts."""
    if first.end != second.start:
        raise QuiverError(
            f"cannot compose: first path ends at {first.end!r}, "
            f"second starts at {second.start!r}"
        )
    return Path(first.start, first.arrows + second.arrows, second.end)


def is_parallel(p: Path, q: Path) -> bool:
    """Whether two paths share both endpoints."""
    return p.start == q.start and p.end == q.end


def enumerate_paths(
    quiver: Quiver,
    source: str,
    target: str,
    max_length: int,
    cap: int | None = None,
) -> list[Path]:
    """All paths from ``source`` to ``target`` of length at most ``max_length``.

    Ordered by length, then lexicographically by arrow declaration order.  The
    length-0 path appears exactly when source == target.  With ``cap`` set, a
    TruncationOverflowError is raised as soon as either the matches or the
    working frontier exceed it.
    """
    quiver.check_vertex(source)
    quiver.check_vertex(target)
    if max_length < 0:
        raise QuiverError("max_length must be nonnegative")
    results: list[Path] = []
    frontier = [quiver.vertex_path(source)]
    if source == target:
        results.append(frontier[0])
    for _ in range(max_length):
        nxt: list[Path] = []
        for path in frontier:
            for arrow in quiver.arrows_from[path.end]:
                extended = Path(path.start, path.arrows + (arrow.name,), arrow.target)
                nxt.append(extended)
                if arrow.target == target:
                    results.append(extended)
                if cap is not None and (len(nxt) > cap or len(results) > cap):
                    raise TruncationOverflowError(
                        f"path count from {source!r} to {target!r} exceeds cap {cap} "
                        f"at length {len(extended)}"
                    )
        frontier = nxt
        if not frontier:
            break
    return results


def to_dot(quiver: Quiver) -> str:
    """Graphviz digraph text: one node per vertex, one labeled edge per arrow."""
    lines = [f'digraph "{quiver.name}" {{']
    for v in quiver.vertices:
        lines.append(f'  "{v}";')
    for a in quiver.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
