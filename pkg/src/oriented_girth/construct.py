"""Explicit oriented graphs with prescribed girth and oriented chromatic number.

Start from a directed cycle coloured into a small tournament, then repeatedly
add a vertex that receives an arc from every existing vertex.  Each such step
keeps the girth and raises the oriented chromatic number by exactly one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .graph import OrientedGraph, directed_cycle, girth, is_tournament, parse, serialize, short_cycles
from .hom import VertexMap, is_homomorphism
from .tournaments import MAX_CATALOG_ORDER, colouring_into_order


class InvalidGirth(ValueError):
    pass


class UnsupportedParameters(ValueError):
    pass


# t0->t1->t2->t3->t4, t2->t0, t3->t0, t4->t0; the other three pairs fixed as
# t1->t3, t1->t4, t2->t4
T5 = OrientedGraph(
    5,
    [(0, 1), (1, 2), (2, 3), (3, 4), (2, 0), (3, 0), (4, 0), (1, 3), (1, 4), (2, 4)],
)


@dataclass(frozen=True)
class Witness:
    graph: OrientedGraph
    target: OrientedGraph
    colouring: VertexMap
    claimed_girth: int
    claimed_chi: int


def _cycle_colouring(length: int) -> list[int]:
    """Colouring of the directed cycle into T5 by residue of the length mod 3."""
    colours = [r % 3 for r in range(length)]
    if length % 3 == 1:
        colours[-1] = 3
    elif length % 3 == 2:
        colours[-2:] = [3, 4]
    return colours


def base_witness(length: int) -> Witness:
    """Directed `length`-cycle coloured into T5, claiming chromatic number 5.

    The claim is only tight for length 5; see `cycle_witness`.
    """
    if length < 3:
        raise InvalidGirth(f"girth must be at least 3, got {length}")
    return Witness(directed_cycle(length), T5, tuple(_cycle_colouring(length)), length, 5)


def cycle_chromatic_number(length: int) -> int:
    """Oriented chromatic number of the directed cycle of the given length."""
    if length == 5:
        return 5
    return 3 if length % 3 == 0 else 4


def cycle_witness(length: int) -> Witness:
    """Directed cycle coloured into a tournament of order equal to its chromatic number.

    Targets are T5 restricted to t0..t2 (a directed triangle) or t0..t3, which
    contains both the triangle t0t1t2 and the 4-cycle t0t1t2t3.  Lengths 2 mod 3
    other than 5 wind the triangle and then the 4-cycle twice.
    """
    if length < 3:
        raise InvalidGirth(f"girth must be at least 3, got {length}")
    chi = cycle_chromatic_number(length)
    if chi == 5 or length % 3 != 2:
        colours = _cycle_colouring(length)
    else:
        colours = [r % 3 for r in range(length - 8)] + [0, 1, 2, 3] * 2
    return Witness(directed_cycle(length), T5.induced(range(chi)), tuple(colours), length, chi)


def extend(w: Witness) -> Witness:
    """Add a vertex dominated by every vertex, in the graph and in the target."""
    m, k = w.graph.order, w.target.order
    graph = OrientedGraph(m + 1, w.graph.arcs | {(i, m) for i in range(m)})
    target = OrientedGraph(k + 1, w.target.arcs | {(i, k) for i in range(k)})
    return Witness(graph, target, w.colouring + (k,), w.claimed_girth, w.claimed_chi + 1)


def construct(k: int, length: int) -> Witness:
    """Oriented graph with girth exactly `length` and oriented chromatic number exactly `k`."""
    if length < 3:
        raise InvalidGirth(f"girth must be at least 3, got {length}")
    if k < 5:
        raise UnsupportedParameters(f"chromatic number must be at least 5, got {k}")
    w = cycle_witness(length)
    while w.claimed_chi < k:
        w = extend(w)
    return w


@dataclass
class WitnessReport:
    # name -> (passed, detail)
    checks: dict[str, tuple[bool, str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(passed for passed, _ in self.checks.values())

    def __str__(self):
        return "\n".join(
            f"{'ok  ' if passed else 'FAIL'} {name}: {detail}" for name, (passed, detail) in self.checks.items()
        )


def verify_witness(w: Witness, check_chi: bool | None = None) -> WitnessReport:
    """Check the witness invariants; with `check_chi`, also the lower bound on chi.

    `check_chi` defaults to on when the claimed value is at most 7.
    """
    if check_chi is None:
        check_chi = w.claimed_chi <= 7
    report = WitnessReport()
    checks = report.checks

    c = w.colouring
    if len(c) != w.graph.order or any(not 0 <= t < w.target.order for t in c):
        checks["homomorphism"] = (False, "colouring is not a total map into the target")
    elif is_homomorphism(w.graph, w.target, c):
        checks["homomorphism"] = (True, "colouring maps every arc to an arc")
    else:
        u, v = next((u, v) for u, v in w.graph.sorted_arcs if (c[u], c[v]) not in w.target.arcs)
        checks["homomorphism"] = (False, f"arc ({u}, {v}) maps to ({c[u]}, {c[v]}), not a target arc")

    checks["target"] = (
        is_tournament(w.target) and w.target.order == w.claimed_chi,
        f"target order {w.target.order}, tournament={is_tournament(w.target)}, claimed chi {w.claimed_chi}",
    )

    g = girth(w.graph)
    if g == w.claimed_girth:
        checks["girth"] = (True, f"girth {g}")
    elif g < w.claimed_girth:
        cyc = short_cycles(w.graph, w.claimed_girth)[0]
        checks["girth"] = (False, f"cycle {list(cyc)} shorter than {w.claimed_girth}")
    else:
        checks["girth"] = (False, f"girth {g}, claimed {w.claimed_girth}")

    if check_chi:
        below = w.claimed_chi - 1
        if w.claimed_chi > MAX_CATALOG_ORDER + 1:
            checks["chi_lower_bound"] = (False, f"claimed chi {w.claimed_chi} beyond catalog cap")
        elif below < 1:
            checks["chi_lower_bound"] = (w.graph.order > 0, "no tournament of order 0")
        else:
            hit = colouring_into_order(w.graph, below)
            if hit is None:
                checks["chi_lower_bound"] = (True, f"no homomorphism into any tournament of order {below}")
            else:
                t, h = hit
                checks["chi_lower_bound"] = (
                    False,
                    f"maps into order-{below} tournament {sorted(t.arcs)} via {list(h)}",
                )
    return report


def write_bundle(directory, w: Witness) -> None:
    """Write graph.odg, target.odg and colouring.txt into `directory`."""
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "graph.odg"), "w") as fh:
        fh.write(f"# girth {w.claimed_girth}\n# chi {w.claimed_chi}\n")
        fh.write(serialize(w.graph))
    with open(os.path.join(directory, "target.odg"), "w") as fh:
        fh.write(serialize(w.target))
    with open(os.path.join(directory, "colouring.txt"), "w") as fh:
        fh.write(format_map(w.colouring))


def read_bundle(directory) -> Witness:
    with open(os.path.join(directory, "graph.odg")) as fh:
        text = fh.read()
    meta = dict(
        line[1:].split() for line in text.splitlines() if line.startswith("# ") and len(line.split()) == 3
    )
    with open(os.path.join(directory, "target.odg")) as fh:
        target = parse(fh.read())
    with open(os.path.join(directory, "colouring.txt")) as fh:
        colouring = parse_map(fh.read())
    graph = parse(text)
    return Witness(
        graph,
        target,
        colouring,
        int(meta.get("girth", girth(graph))),
        int(meta.get("chi", target.order)),
    )


def format_map(image) -> str:
    return "map: " + " ".join(str(i) for i in image) + "\n"


def parse_map(text: str) -> VertexMap:
    line = text.strip()
    if not line.startswith("map:"):
        raise ValueError(f"expected 'map: ...', got {line[:40]!r}")
    return tuple(int(x) for x in line[4:].split())
