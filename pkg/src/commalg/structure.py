"""Reachability structure of a quiver: components, closure, condensation."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InternalInvariantError, QuiverError
from .quiver import Quiver

__all__ = [
    "ComponentPartition",
    "ReachabilityPattern",
    "CondensationOrder",
    "path_components",
    "reachability",
    "consistent_ordering",
    "condensation",
    "topological_component_order",
    "longest_chain",
]


@dataclass(frozen=True)
class ComponentPartition:
    """Partition of the vertices into path components (mutual reachability).

    Components are ordered by their first-encountered vertex in declaration
    order, and each component lists its vertices in declaration order.
    """

    components: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        seen: set[str] = set()
        for comp in self.components:
            if not comp:
                raise InternalInvariantError("empty component")
            for v in comp:
                if v in seen:
                    raise InternalInvariantError(f"vertex {v!r} in two components")
                seen.add(v)

    @cached_property
    def membership(self) -> dict[str, int]:
        return {v: i for i, comp in enumerate(self.components) for v in comp}

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class ReachabilityPattern:
    """Reflexive-transitive reachability as a boolean matrix over a vertex order."""

    order: tuple[str, ...]
    bits: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.order)
        if len(self.bits) != n or any(len(row) != n for row in self.bits):
            raise InternalInvariantError("pattern shape does not match vertex order")
        for i in range(n):
            if not self.bits[i][i]:
                raise InternalInvariantError("pattern must be reflexive")
        for i in range(n):
            for j in range(n):
                if not self.bits[i][j]:
                    continue
                for k in range(n):
                    if self.bits[j][k] and not self.bits[i][k]:
                        raise InternalInvariantError("pattern must be transitive")

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.order)}

    def at(self, source: str, target: str) -> bool:
        try:
            return self.bits[self.index[source]][self.index[target]]
        except KeyError as exc:
            raise QuiverError(f"unknown vertex {exc.args[0]!r}") from None

    def reordered(self, new_order: Sequence[str]) -> "ReachabilityPattern":
        new_order = tuple(new_order)
        if sorted(new_order) != sorted(self.order):
            raise QuiverError("new order is not a permutation of the vertices")
        idx = self.index
        bits = tuple(
            tuple(self.bits[idx[v]][idx[w]] for w in new_order) for v in new_order
        )
        return ReachabilityPattern(new_order, bits)

    def bitstrings(self) -> tuple[str, ...]:
        return tuple("".join("1" if b else "0" for b in row) for row in self.bits)

    def true_count(self) -> int:
        return sum(sum(row) for row in self.bits)


@dataclass(frozen=True)
class CondensationOrder:
    """Component-level reachability: a partial order on the components."""

    relation: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        m = len(self.relation)
        if any(len(row) != m for row in self.relation):
            raise InternalInvariantError("condensation relation is not square")
        for i in range(m):
            if not self.relation[i][i]:
                raise InternalInvariantError("condensation must be reflexive")
            for j in range(m):
                if i != j and self.relation[i][j] and self.relation[j][i]:
                    raise InternalInvariantError(
                        "condensation must be antisymmetric: distinct components "
                        "reach each other"
                    )
                if not self.relation[i][j]:
                    continue
                for k in range(m):
                    if self.relation[j][k] and not self.relation[i][k]:
                        raise InternalInvariantError("condensation must be transitive")

    @property
    def m(self) -> int:
        return len(self.relation)


def path_components(quiver: Quiver) -> ComponentPartition:
    """Strongly connected components, iterative Tarjan."""
    index_of: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    raw: list[list[str]] = []
    counter = 0

    for root in quiver.vertices:
        if root in index_of:
            continue
        index_of[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        call = [(root, iter(quiver.arrows_from[root]))]
        while call:
            node, arrows = call[-1]
            advanced = False
            for arrow in arrows:
                w = arrow.target
                if w not in index_of:
                    index_of[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    call.append((w, iter(quiver.arrows_from[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[node] = min(low[node], index_of[w])
            if advanced:
                continue
            call.pop()
            if call:
                parent = call[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index_of[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                raw.append(comp)

    decl = quiver.vertex_index
    canonical = [tuple(sorted(comp, key=decl.__getitem__)) for comp in raw]
    canonical.sort(key=lambda comp: decl[comp[0]])
    return ComponentPartition(tuple(canonical))


def reachability(quiver: Quiver) -> ReachabilityPattern:
    """Reflexive-transitive closure of the arrow relation (Warshall)."""
    n = quiver.n
    idx = quiver.vertex_index
    bits = [[False] * n for _ in range(n)]
    for i in range(n):
        bits[i][i] = True
    for a in quiver.arrows:
        bits[idx[a.source]][idx[a.target]] = True
    for k in range(n):
        row_k = bits[k]
        for i in range(n):
            if bits[i][k]:
                row_i = bits[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return ReachabilityPattern(quiver.vertices, tuple(tuple(row) for row in bits))


def condensation(
    partition: ComponentPartition, pattern: ReachabilityPattern
) -> CondensationOrder:
    """Component-level relation; every representative pair must agree."""
    m = len(partition)
    relation = []
    for i in range(m):
        row = []
        for j in range(m):
            values = {
                pattern.at(u, w)
                for u in partition.components[i]
                for w in partition.components[j]
            }
            if len(values) != 1:
                raise InternalInvariantError(
                    f"reachability between components {i} and {j} depends on "
                    "the representative"
                )
            row.append(values.pop())
        relation.append(tuple(row))
    return CondensationOrder(tuple(relation))


def topological_component_order(cond: CondensationOrder) -> tuple[int, ...]:
    """Topological sort of the components, smallest-index tie-break (Kahn)."""
    m = cond.m
    indegree = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and cond.relation[i][j]:
                indegree[j] += 1
    ready = [i for i in range(m) if indegree[i] == 0]
    heapq.heapify(ready)
    out: list[int] = []
    while ready:
        i = heapq.heappop(ready)
        out.append(i)
        for j in range(m):
            if i != j and cond.relation[i][j]:
                indegree[j] -= 1
                if indegree[j] == 0:
                    heapq.heappush(ready, j)
    if len(out) != m:
        raise InternalInvariantError("condensation relation has a cycle")
    return tuple(out)


def consistent_ordering(
    quiver: Quiver,
    partition: ComponentPartition,
    pattern: ReachabilityPattern | None = None,
) -> tuple[str, ...]:
    """Vertex order with components contiguous and topologically sorted.

    Reachability goes weakly forward; within a component the declaration
    order is kept, and incomparable components keep their original order.
    """
    if pattern is None:
        pattern = reachability(quiver)
    cond = condensation(partition, pattern)
    order: list[str] = []
    for ci in topological_component_order(cond):
        order.extend(partition.components[ci])
    return tuple(order)


def _longest_chain(relation: Sequence[Sequence[bool]]) -> int:
    m = len(relation)
    if m == 0:
        return 0
    best: dict[int, int] = {}

    order = topological_component_order(CondensationOrder(
        tuple(tuple(row) for row in relation)
    ))
    for i in reversed(order):
        succ = [best[j] for j in range(m) if j != i and relation[i][j]]
        best[i] = 1 + max(succ, default=0)
    return max(best.values())


def longest_chain(cond: CondensationOrder) -> int:
    """Largest number of elements in a strictly increasing chain (>= 1)."""
    return _longest_chain(cond.relation)
