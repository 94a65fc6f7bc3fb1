"""Oriented graphs: validated representation, girth, short cycles, ODG text format."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Arc = tuple[int, int]
Cycle = tuple[int, ...]

#: Girth of a graph without directed cycles. Compares greater than every length,
#: so ``girth(d) >= l`` holds vacuously for acyclic graphs.
ACYCLIC = math.inf


class GraphError(ValueError):
    """Base class for invalid oriented graphs."""


class LoopArc(GraphError):
    pass


class OppositeArcs(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class ODGSyntaxError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class OrientedGraph:
    """Loopless digraph on vertices ``0..order-1`` with no pair of opposite arcs.

    Arcs may be given as any iterable of pairs; duplicates are dropped.
    """

    order: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.order < 0:
            raise GraphError(f"negative order {self.order}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in sorted(arcs):
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise VertexOutOfRange(f"arc ({u}, {v}) outside 0..{self.order - 1}")
            if u == v:
                raise LoopArc(f"loop at vertex {u}")
            if (v, u) in arcs:
                raise OppositeArcs(f"both ({u}, {v}) and ({v}, {u}) present")
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def out_nbrs(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.sorted_arcs:
            out[u].append(v)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_nbrs(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.sorted_arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(x)) for x in inn)

    @cached_property
    def out_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in nb) for nb in self.out_nbrs)

    @cached_property
    def in_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nb) for nb in self.in_nbrs)

    @cached_property
    def sorted_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    def degree(self, v: int) -> int:
        return len(self.out_nbrs[v]) + len(self.in_nbrs[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"OrientedGraph({self.order}, {list(self.sorted_arcs)})"

    def delete_arcs(self, arcs: Iterable[Arc]) -> OrientedGraph:
        return OrientedGraph(self.order, self.arcs - frozenset(arcs))

    def induced(self, vertices: Sequence[int]) -> OrientedGraph:
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return OrientedGraph(
            len(vertices),
            [(index[u], index[v]) for u, v in self.arcs if u in index and v in index],
        )

    def weak_components(self) -> list[list[int]]:
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.out_nbrs[x] + self.in_nbrs[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps


def new_oriented_graph(order: int, arcs: Iterable[Arc]) -> OrientedGraph:
    return OrientedGraph(order, frozenset(arcs))


def directed_cycle(length: int) -> OrientedGraph:
    return OrientedGraph(length, [(i, (i + 1) % length) for i in range(length)])


def disjoint_union(*graphs: OrientedGraph) -> OrientedGraph:
    arcs, offset = [], 0
    for g in graphs:
        arcs.extend((u + offset, v + offset) for u, v in g.arcs)
        offset += g.order
    return OrientedGraph(offset, arcs)


def is_tournament(d: OrientedGraph) -> bool:
    return len(d.arcs) == d.order * (d.order - 1) // 2


def girth(d: OrientedGraph) -> float | int:
    """Length of a shortest directed cycle, or ``ACYCLIC``.

    One BFS per vertex v, measuring the distance from v back to itself.
    """
    best = ACYCLIC
    n = d.order
    for v in range(n):
        dist = [-1] * n
        queue = deque()
        for w in d.out_nbrs[v]:
            if dist[w] < 0:
                dist[w] = 1
                queue.append(w)
        while queue:
            x = queue.popleft()
            if dist[x] + 1 >= best:
                break
            if v in d.out_nbrs[x]:
                best = dist[x] + 1
                break
            for y in d.out_nbrs[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if best == 3:
            break
    return best


def short_cycles(d: OrientedGraph, length: int) -> list[Cycle]:
    """All directed cycles with fewer than `length` vertices.

    Each cycle is listed once, rotated so that its smallest vertex comes first.
    """
    if length < 3:
        raise ValueError("length bound must be at least 3")
    cap = length - 1
    found: list[Cycle] = []
    out = d.out_nbrs
    for s in range(d.order):
        path = [s]
        on_path = {s}
        # iterative DFS keeps deep recursion off the stack for long caps
        stack = [iter(out[s])]
        while stack:
            for y in stack[-1]:
                if y == s:
                    if len(path) >= 2:
                        found.append(tuple(path))
                    continue
                if y < s or y in on_path or len(path) >= cap:
                    continue
                path.append(y)
                on_path.add(y)
                stack.append(iter(out[y]))
                break
            else:
                stack.pop()
                on_path.discard(path.pop())
    return found


def parse(text: str) -> OrientedGraph:
    order = None
    arcs: list[Arc] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        if order is None:
            head = line.split(" ")
            if len(head) != 2 or head[0] != "digraph" or not head[1].isdigit():
                raise ODGSyntaxError(lineno, f"expected 'digraph <order>', got {line!r}")
            order = int(head[1])
            continue
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ODGSyntaxError(lineno, f"expected '<u> <v>', got {line!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    if order is None:
        raise ODGSyntaxError(0, "missing 'digraph <order>' header")
    return OrientedGraph(order, arcs)


def serialize(d: OrientedGraph) -> str:
    lines = [f"digraph {d.order}"]
    lines.extend(f"{u} {v}" for u, v in d.sorted_arcs)
    return "\n".join(lines) + "\n"


def to_dot(d: OrientedGraph) -> str:
    body = "".join(f" {v};" for v in range(d.order) if d.degree(v) == 0)
    body += "".join(f" {u} -> {v};" for u, v in d.sorted_arcs)
    return f"digraph G {{{body} }}\n"


def read_odg(path) -> OrientedGraph:
    with open(path) as fh:
        return parse(fh.read())


def write_odg(path, d: OrientedGraph) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(d))
