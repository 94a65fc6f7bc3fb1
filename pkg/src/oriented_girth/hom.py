"""Homomorphism search between oriented graphs and the deciders built on it.

A vertex map is a plain tuple ``image`` with ``image[x]`` the target of source
vertex ``x``.  The solver keeps target-vertex domains as bitmasks and maintains
arc consistency after every assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

from .graph import Arc, OrientedGraph

VertexMap = tuple[int, ...]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Neighbourhoods:
    """Memoised unions of target out/in-neighbourhoods over domain masks."""

    def __init__(self, c: OrientedGraph):
        self.out_mask = c.out_mask
        self.in_mask = c.in_mask
        self._succ: dict[int, int] = {}
        self._pred: dict[int, int] = {}

    def succ(self, mask: int) -> int:
        r = self._succ.get(mask)
        if r is None:
            r = 0
            for t in _bits(mask):
                r |= self.out_mask[t]
            self._succ[mask] = r
        return r

    def pred(self, mask: int) -> int:
        r = self._pred.get(mask)
        if r is None:
            r = 0
            for t in _bits(mask):
                r |= self.in_mask[t]
            self._pred[mask] = r
        return r


def _propagate(d: OrientedGraph, nb: _Neighbourhoods, doms: list[int], queue: list[int]) -> bool:
    out, inn = d.out_nbrs, d.in_nbrs
    pending = set(queue)
    while queue:
        x = queue.pop()
        pending.discard(x)
        dx = doms[x]
        if out[x]:
            s = nb.succ(dx)
            for y in out[x]:
                dy = doms[y]
                ny = dy & s
                if ny != dy:
                    if not ny:
                        return False
                    doms[y] = ny
                    if y not in pending:
                        pending.add(y)
                        queue.append(y)
        if inn[x]:
            p = nb.pred(dx)
            for y in inn[x]:
                dy = doms[y]
                ny = dy & p
                if ny != dy:
                    if not ny:
                        return False
                    doms[y] = ny
                    if y not in pending:
                        pending.add(y)
                        queue.append(y)
    return True


def _search(
    d: OrientedGraph, c: OrientedGraph, order: Sequence[int], doms: list[int] | None = None
) -> Iterator[VertexMap]:
    """Yield every homomorphism d -> c.

    Variables are branched in `order`, values ascending; with the identity order
    the output is lexicographic in the image tuple.
    """
    n = d.order
    if n == 0:
        yield ()
        return
    if c.order == 0:
        return
    nb = _Neighbourhoods(c)
    if doms is None:
        doms = [(1 << c.order) - 1] * n
    doms = list(doms)
    if not _propagate(d, nb, doms, list(range(n))):
        return
    # explicit stack: (depth, domains, untried values at order[depth])
    stack = [(0, doms, doms[order[0]])]
    while stack:
        depth, doms, untried = stack.pop()
        if not untried:
            continue
        low = untried & -untried
        stack.append((depth, doms, untried ^ low))
        v = order[depth]
        new = list(doms)
        new[v] = low
        if not _propagate(d, nb, new, [v]):
            continue
        if depth + 1 == n:
            yield tuple(m.bit_length() - 1 for m in new)
        else:
            stack.append((depth + 1, new, new[order[depth + 1]]))


def _search_order(d: OrientedGraph, vertices: Sequence[int]) -> list[int]:
    # decreasing degree; ties go to the vertex with most neighbours already placed
    remaining = set(vertices)
    placed: set[int] = set()
    order = []
    while remaining:
        v = max(
            remaining,
            key=lambda x: (
                sum(1 for y in d.out_nbrs[x] + d.in_nbrs[x] if y in placed),
                d.degree(x),
                -x,
            )
            if placed
            else (0, d.degree(x), -x),
        )
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def is_homomorphism(d: OrientedGraph, c: OrientedGraph, image: Sequence[int]) -> bool:
    if len(image) != d.order or any(not 0 <= t < c.order for t in image):
        return False
    return all((image[u], image[v]) in c.arcs for u, v in d.arcs)


def compose(g: Sequence[int], h: Sequence[int]) -> VertexMap:
    """The map ``h ∘ g`` (apply g first)."""
    return tuple(h[x] for x in g)


def find_homomorphism(d: OrientedGraph, c: OrientedGraph) -> VertexMap | None:
    """A homomorphism d -> c, or None when none exists.

    Weak components are solved independently and glued together.
    """
    image = [0] * d.order
    for comp in d.weak_components():
        sub = d.induced(comp)
        hit = next(_search(sub, c, _search_order(sub, range(sub.order))), None)
        if hit is None:
            return None
        for i, v in enumerate(comp):
            image[v] = hit[i]
    return tuple(image)


def enumerate_homomorphisms(
    d: OrientedGraph, c: OrientedGraph, limit: int | None = None
) -> list[VertexMap]:
    """All homomorphisms d -> c in lexicographic order of the image tuple, truncated at `limit`."""
    return list(islice(_search(d, c, range(d.order)), limit))


def automorphisms(c: OrientedGraph) -> list[VertexMap]:
    n = c.order
    sig = [(len(c.out_nbrs[v]), len(c.in_nbrs[v])) for v in range(n)]
    result = []
    perm: list[int] = []
    used = [False] * n

    def extend(x):
        if x == n:
            result.append(tuple(perm))
            return
        for t in range(n):
            if used[t] or sig[t] != sig[x]:
                continue
            ok = all(
                ((x, y) in c.arcs) == ((t, perm[y]) in c.arcs)
                and ((y, x) in c.arcs) == ((perm[y], t) in c.arcs)
                for y in range(x)
            )
            if ok:
                used[t] = True
                perm.append(t)
                extend(x + 1)
                perm.pop()
                used[t] = False

    extend(0)
    return result


def is_core(d: OrientedGraph) -> bool:
    """True iff every endomorphism of d is an automorphism.

    A non-surjective endomorphism exists iff d maps into d minus some vertex.
    """
    for v in range(d.order):
        rest = [x for x in range(d.order) if x != v]
        if find_homomorphism(d, d.induced(rest)) is not None:
            return False
    return True


def is_pointed(c: OrientedGraph, d: OrientedGraph) -> bool:
    """True iff no two c-colourings of d differ in exactly one vertex."""
    full = (1 << c.order) - 1
    for h in _search(d, c, range(d.order)):
        for v in range(d.order):
            allowed = full & ~(1 << h[v])
            for w in d.out_nbrs[v]:
                allowed &= c.in_mask[h[w]]
            for u in d.in_nbrs[v]:
                allowed &= c.out_mask[h[u]]
            if allowed:
                return False
    return True


def is_uniquely_colourable(d: OrientedGraph, c: OrientedGraph) -> bool:
    homs = enumerate_homomorphisms(d, c)
    if not any(len(set(h)) == c.order for h in homs):
        return False
    orbit = {compose(homs[0], a) for a in automorphisms(c)}
    return orbit == set(homs)


@dataclass(frozen=True)
class ColouringReport:
    """Outcome of checking the two oriented-colouring conditions.

    On success `completion` is a tournament on colours ``0..k-1`` (colour ``i``
    becomes vertex ``i-1``) and `homomorphism` maps the graph into it.  On
    failure `condition` is 1 or 2 and `witness` holds the offending arc(s).
    """

    valid: bool
    condition: int | None = None
    witness: tuple[Arc, ...] = ()
    completion: OrientedGraph | None = None
    homomorphism: VertexMap | None = None

    def __bool__(self):
        return self.valid


def validate_oriented_colouring(
    d: OrientedGraph, colours: Sequence[int], k: int | None = None
) -> ColouringReport:
    if len(colours) != d.order:
        raise ValueError(f"colouring has {len(colours)} entries, graph has {d.order} vertices")
    if k is None:
        k = max(colours, default=0)
    if any(not 1 <= col <= k for col in colours):
        raise ValueError(f"colours must lie in 1..{k}")
    image_arcs: dict[Arc, Arc] = {}
    for a, b in d.sorted_arcs:
        if colours[a] == colours[b]:
            return ColouringReport(False, 1, ((a, b),))
        image_arcs.setdefault((colours[a], colours[b]), (a, b))
    for (i, j), arc in image_arcs.items():
        other = image_arcs.get((j, i))
        if other is not None:
            return ColouringReport(False, 2, (arc, other))
    arcs = {(i - 1, j - 1) for i, j in image_arcs}
    for i in range(k):
        for j in range(i + 1, k):
            if (j, i) not in arcs:
                arcs.add((i, j))
    return ColouringReport(
        True,
        completion=OrientedGraph(k, arcs),
        homomorphism=tuple(col - 1 for col in colours),
    )
