"""Tournaments up to isomorphism and the oriented chromatic number.

A tournament on ``k`` vertices is encoded as a ``k(k-1)/2``-bit integer: pairs
are taken in the order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... with the
first pair in the most significant bit, and a bit is set iff the arc runs from
the smaller to the larger vertex.  The canonical code is the minimum code over
all relabellings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import OrientedGraph, is_tournament
from .hom import find_homomorphism

MAX_CATALOG_ORDER = 8


class OrderTooLarge(ValueError):
    pass


def pair_order(k: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, k) for i in range(j)]


def bitcode(t: OrientedGraph, perm: Sequence[int] | None = None) -> int:
    """Code of `t` with ``perm[i]`` placed at position i."""
    perm = range(t.order) if perm is None else perm
    code = 0
    for i, j in pair_order(t.order):
        code = (code << 1) | ((perm[i], perm[j]) in t.arcs)
    return code


def tournament_from_code(k: int, code: int) -> OrientedGraph:
    pairs = pair_order(k)
    arcs = []
    for pos, (i, j) in enumerate(pairs):
        bit = (code >> (len(pairs) - 1 - pos)) & 1
        arcs.append((i, j) if bit else (j, i))
    return OrientedGraph(k, arcs)


def canonical_code(t: OrientedGraph) -> int:
    """Minimum bitcode over all vertex permutations.

    Positions are filled left to right; placing a vertex at position j fixes
    the j bits of pairs (0,j)..(j-1,j), so only prefixes that attain the
    smallest partial code survive each level.
    """
    if not is_tournament(t):
        raise ValueError("canonical_code needs a tournament")
    k = t.order
    if k <= 1:
        return 0
    out = t.out_mask
    full = (1 << k) - 1
    # partial states: (placed vertices in order, bitmask of placed)
    frontier = [((v,), 1 << v) for v in range(k)]
    code = 0
    for j in range(1, k):
        best = None
        nxt = []
        for placed, used in frontier:
            free = full & ~used
            while free:
                low = free & -free
                free ^= low
                w = low.bit_length() - 1
                chunk = 0
                for p in placed:
                    chunk = (chunk << 1) | ((out[p] >> w) & 1)
                if best is None or chunk < best:
                    best = chunk
                    nxt = [(placed + (w,), used | low)]
                elif chunk == best:
                    nxt.append((placed + (w,), used | low))
        code = (code << j) | best
        frontier = _dedupe(nxt)
    return code


def _dedupe(states):
    seen = set()
    out = []
    for placed, used in states:
        if placed not in seen:
            seen.add(placed)
            out.append((placed, used))
    return out


@dataclass(frozen=True)
class TournamentCatalog:
    """One canonical representative per isomorphism class of k-vertex tournaments."""

    order: int
    codes: tuple[int, ...]

    @property
    def tournaments(self) -> tuple[OrientedGraph, ...]:
        return _materialise(self.order, self.codes)

    def __len__(self):
        return len(self.codes)

    def __iter__(self) -> Iterator[OrientedGraph]:
        return iter(self.tournaments)


@lru_cache(maxsize=None)
def _materialise(k, codes):
    return tuple(tournament_from_code(k, c) for c in codes)


_loaded_codes: dict[int, tuple[int, ...]] = {}


@lru_cache(maxsize=None)
def enumerate_tournaments(k: int) -> TournamentCatalog:
    """Catalog for order k, built by adding one vertex to each class of order k-1."""
    if k < 1:
        raise ValueError("order must be at least 1")
    if k > MAX_CATALOG_ORDER:
        raise OrderTooLarge(f"catalog order {k} exceeds cap {MAX_CATALOG_ORDER}")
    if k in _loaded_codes:
        return TournamentCatalog(k, _loaded_codes[k])
    if k == 1:
        return TournamentCatalog(1, (0,))
    codes = set()
    for base in enumerate_tournaments(k - 1):
        for outs in range(1 << (k - 1)):
            arcs = set(base.arcs)
            for v in range(k - 1):
                arcs.add((k - 1, v) if (outs >> v) & 1 else (v, k - 1))
            codes.add(canonical_code(OrientedGraph(k, arcs)))
    return TournamentCatalog(k, tuple(sorted(codes)))


def save_catalog_cache(path, max_order: int) -> None:
    """Write catalogs 1..max_order as ``<k>:<bitcode-hex>`` lines."""
    lines = []
    for k in range(1, max_order + 1):
        lines.extend(f"{k}:{code:x}" for code in enumerate_tournaments(k).codes)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_catalog_cache(path) -> bool:
    """Seed catalogs from a cache file; returns False when the file is absent."""
    if not os.path.exists(path):
        return False
    found: dict[int, list[int]] = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            k, code = line.split(":")
            found.setdefault(int(k), []).append(int(code, 16))
    for k, codes in found.items():
        for code in codes:
            if canonical_code(tournament_from_code(k, code)) != code:
                raise ValueError(f"cache entry {k}:{code:x} is not canonical")
        _loaded_codes[k] = tuple(sorted(codes))
    enumerate_tournaments.cache_clear()
    return True


def oriented_chromatic_number(d: OrientedGraph, cap: int = MAX_CATALOG_ORDER) -> int | None:
    """Smallest k <= cap with a homomorphism from d to some k-tournament, else None."""
    if cap > MAX_CATALOG_ORDER:
        raise OrderTooLarge(f"cap {cap} exceeds {MAX_CATALOG_ORDER}")
    if d.order == 0:
        return 0
    for k in range(1, cap + 1):
        if colouring_into_order(d, k) is not None:
            return k
    return None


def colouring_into_order(d: OrientedGraph, k: int) -> tuple[OrientedGraph, tuple[int, ...]] | None:
    """First catalog tournament of order k that d maps into, with the map."""
    if is_tournament(d) and d.order > k:
        return None
    for t in enumerate_tournaments(k):
        h = find_homomorphism(d, t)
        if h is not None:
            return t, h
    return None

