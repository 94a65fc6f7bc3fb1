"""Random blow-up model: sample, destroy short cycles, and Monte Carlo checks.

A base oriented graph on ``a`` vertices is blown up by replacing vertex ``i``
with the part ``[i*n, (i+1)*n)`` and each base arc with all ``n*n`` arcs between
the corresponding parts.  A sample keeps every blow-up arc independently with
probability ``p = n**(eps - 1)``; arcs are visited in sorted order and each
consumes one uniform draw from ``numpy.random.default_rng(seed)``.  Trial ``t``
of an experiment uses seed ``seed + t``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace
from functools import cached_property
from itertools import combinations

import numpy as np

from .graph import Arc, OrientedGraph, girth, serialize, short_cycles
from .hom import compose, enumerate_homomorphisms, find_homomorphism, is_homomorphism, is_pointed
from .tournaments import enumerate_tournaments


class NotLarge(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class SampleParams:
    base: OrientedGraph
    n: int
    min_girth: int
    eps: float | None = None
    k: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.eps is None:
            object.__setattr__(self, "eps", 1 / (8 * self.min_girth))
        if self.k is None:
            object.__setattr__(self, "k", max(self.base.order, 1))
        if self.min_girth < 3:
            raise ValueError(f"min_girth must be at least 3, got {self.min_girth}")
        if not 0 < self.eps < 1 / (4 * self.min_girth):
            raise ValueError(f"eps must lie in (0, 1/{4 * self.min_girth}), got {self.eps}")
        if not self.n >= self.k >= 1:
            raise ValueError(f"need n >= k >= 1, got n={self.n}, k={self.k}")

    @property
    def p(self) -> float:
        return self.n ** (self.eps - 1)

    def to_dict(self) -> dict:
        return {
            "base": serialize(self.base),
            "n": self.n,
            "min_girth": self.min_girth,
            "eps": self.eps,
            "k": self.k,
            "seed": self.seed,
            "p": self.p,
        }


@dataclass(frozen=True)
class BlowUpGraph:
    base: OrientedGraph
    n: int

    @property
    def order(self) -> int:
        return self.base.order * self.n

    def part_of(self, x: int) -> int:
        return x // self.n

    def part(self, i: int) -> range:
        return range(i * self.n, (i + 1) * self.n)

    @cached_property
    def psi(self) -> tuple[int, ...]:
        return tuple(x // self.n for x in range(self.order))

    @cached_property
    def arc_array(self) -> np.ndarray:
        """All blow-up arcs as an ``(m, 2)`` array in lexicographic order."""
        n = self.n
        offs = np.arange(n)
        blocks = []
        for i, j in self.base.sorted_arcs:
            src = np.repeat(i * n + offs, n)
            dst = np.tile(j * n + offs, n)
            blocks.append(np.stack([src, dst], axis=1))
        if not blocks:
            return np.empty((0, 2), dtype=np.int64)
        arcs = np.concatenate(blocks)
        return arcs[np.lexsort((arcs[:, 1], arcs[:, 0]))]

    @cached_property
    def graph(self) -> OrientedGraph:
        return OrientedGraph(self.order, map(tuple, self.arc_array.tolist()))


def blow_up(base: OrientedGraph, n: int) -> BlowUpGraph:
    if n < 1:
        raise ValueError("part size must be at least 1")
    return BlowUpGraph(base, n)


def sample(params: SampleParams, seed: int | None = None) -> OrientedGraph:
    """Spanning subgraph of the blow-up keeping each arc with probability p."""
    bu = blow_up(params.base, params.n)
    return _sample(bu, params.p, params.seed if seed is None else seed)


def _sample(bu: BlowUpGraph, p: float, seed: int) -> OrientedGraph:
    arcs = bu.arc_array
    keep = np.random.default_rng(seed).random(len(arcs)) < p
    return OrientedGraph(bu.order, map(tuple, arcs[keep].tolist()))


def _cycle_arcs(cyc) -> list[Arc]:
    return [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def is_matching(arcs) -> bool:
    ends = [x for a in arcs for x in a]
    return len(ends) == len(set(ends))


@dataclass(frozen=True)
class CycleRemoval:
    short_cycle_count: int
    matching_achieved: bool
    rounds: int


def destroy_short_cycles(d: OrientedGraph, min_girth: int):
    """Delete one arc from every cycle shorter than `min_girth`.

    Arcs are chosen greedily, preferring ones that share no endpoint with arcs
    already chosen; if the cycles overlap too much for that, the first arc of
    the cycle is taken and the result is flagged as not a matching.

    Returns ``(d_star, removed, CycleRemoval)``.
    """
    removed: list[Arc] = []
    touched: set[int] = set()
    first_count = None
    rounds = 0
    cur = d
    while True:
        cycles = short_cycles(cur, min_girth)
        if first_count is None:
            first_count = len(cycles)
        if not cycles:
            break
        rounds += 1
        chosen: set[Arc] = set()
        for cyc in cycles:
            arcs = _cycle_arcs(cyc)
            if any(a in chosen for a in arcs):
                continue
            pick = next((a for a in arcs if a[0] not in touched and a[1] not in touched), arcs[0])
            chosen.add(pick)
            touched.update(pick)
            removed.append(pick)
        cur = cur.delete_arcs(chosen)
    removed.sort()
    return cur, tuple(removed), CycleRemoval(first_count, is_matching(removed), rounds)


@dataclass(frozen=True)
class SampleOutcome:
    d_star: OrientedGraph
    psi: tuple[int, ...]
    removed: tuple[Arc, ...]
    short_cycle_count: int
    matching_achieved: bool
    removal_rounds: int
    sampled_arcs: int = 0

    def to_dict(self) -> dict:
        return {
            "d_star": serialize(self.d_star),
            "psi": list(self.psi),
            "removed": [list(a) for a in self.removed],
            "short_cycle_count": self.short_cycle_count,
            "matching_achieved": self.matching_achieved,
            "removal_rounds": self.removal_rounds,
            "sampled_arcs": self.sampled_arcs,
        }


def run_pipeline(params: SampleParams) -> SampleOutcome:
    bu = blow_up(params.base, params.n)
    d_prime = _sample(bu, params.p, params.seed)
    d_star, removed, info = destroy_short_cycles(d_prime, params.min_girth)
    return SampleOutcome(
        d_star,
        bu.psi,
        removed,
        info.short_cycle_count,
        info.matching_achieved,
        info.rounds,
        len(d_prime.arcs),
    )


def _mean_se(values) -> tuple[float, float]:
    arr = np.asarray(values, dtype=float)
    if len(arr) < 2:
        return float(arr.mean()) if len(arr) else 0.0, 0.0
    return float(arr.mean()), float(arr.std(ddof=1) / math.sqrt(len(arr)))


def intersecting_pairs(cycles) -> int:
    """Number of unordered pairs of distinct cycles sharing a vertex."""
    by_vertex: dict[int, list[int]] = {}
    for idx, cyc in enumerate(cycles):
        for v in cyc:
            by_vertex.setdefault(v, []).append(idx)
    pairs = set()
    for members in by_vertex.values():
        pairs.update(combinations(members, 2))
    return len(pairs)


def lemma1_experiment(params: SampleParams, trials: int) -> dict:
    """Short-cycle count and intersecting-pair count against their expectation bounds."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    bu = blow_up(params.base, params.n)
    records = []
    for t in range(trials):
        d = _sample(bu, params.p, params.seed + t)
        cycles = short_cycles(d, params.min_girth)
        records.append({"trial": t, "short_cycles": len(cycles), "intersecting_pairs": intersecting_pairs(cycles)})
    n, eps, ell = params.n, params.eps, params.min_girth
    bound_cycles = n ** (eps * ell - eps / 2)
    bound_pairs = n ** -0.5
    mean_c, se_c = _mean_se([r["short_cycles"] for r in records])
    mean_p, se_p = _mean_se([r["intersecting_pairs"] for r in records])
    return {
        "experiment": "lemma1",
        "params": params.to_dict(),
        "trials": records,
        "aggregate": {
            "mean_short_cycles": mean_c,
            "se_short_cycles": se_c,
            "mean_intersecting_pairs": mean_p,
            "se_intersecting_pairs": se_p,
        },
        "bounds": {"short_cycles": bound_cycles, "intersecting_pairs": bound_pairs},
        "pass": {
            "short_cycles": mean_c <= bound_cycles + 3 * se_c,
            "intersecting_pairs": mean_p <= bound_pairs + 3 * se_p,
        },
        "wall_clock_s": time.perf_counter() - start,
    }


def lemma2_check(d_prime: OrientedGraph, blowup: BlowUpGraph, subset, k: int) -> dict:
    """Largeness of `subset` and the fewest sampled arcs over its good arcs."""
    n = blowup.n
    members = set(subset)
    if any(not 0 <= x < blowup.order for x in members):
        raise ValueError("vertex set must lie inside the blow-up")
    sizes = [0] * blowup.base.order
    for x in members:
        sizes[blowup.part_of(x)] += 1
    good = [(i, j) for i, j in blowup.base.sorted_arcs if sizes[i] >= n / k and sizes[j] >= n / k]
    if not good:
        raise NotLarge("no base arc has both parts meeting the set in at least n/k vertices")
    counts = dict.fromkeys(good, 0)
    for x, y in d_prime.arcs:
        if x in members and y in members:
            key = (blowup.part_of(x), blowup.part_of(y))
            if key in counts:
                counts[key] += 1
    min_arcs = min(counts.values())
    return {
        "large": True,
        "good_arcs": [list(a) for a in good],
        "min_arcs": min_arcs,
        "at_least_n": min_arcs >= n,
    }


def lemma2_experiment(params: SampleParams, trials: int, subset=None) -> dict:
    start = time.perf_counter()
    bu = blow_up(params.base, params.n)
    subset = range(bu.order) if subset is None else subset
    records = []
    for t in range(trials):
        d = _sample(bu, params.p, params.seed + t)
        rep = lemma2_check(d, bu, subset, params.k)
        records.append({"trial": t, "min_arcs": rep["min_arcs"], "at_least_n": rep["at_least_n"]})
    freq = sum(r["at_least_n"] for r in records) / trials
    mean, se = _mean_se([r["min_arcs"] for r in records])
    return {
        "experiment": "lemma2",
        "params": params.to_dict(),
        "trials": records,
        "aggregate": {"frequency_at_least_n": freq, "mean_min_arcs": mean, "se_min_arcs": se},
        "bounds": {"n": params.n},
        "pass": {"frequency_at_least_n": None},
        "wall_clock_s": time.perf_counter() - start,
    }


def lemma3_check(d_prime, blowup: BlowUpGraph, a_set, b_set, k: int, eps: float, min_girth: int) -> dict:
    """Arcs from `a_set` to `b_set` against ``min(|B|, n**(eps*min_girth))``."""
    n = blowup.n
    a_set, b_set = set(a_set), set(b_set)
    if not a_set:
        raise PreconditionViolated("A must be nonempty")
    parts_a = {blowup.part_of(x) for x in a_set}
    parts_b = {blowup.part_of(x) for x in b_set}
    if len(parts_a) != 1:
        raise PreconditionViolated("A must lie inside a single part")
    if len(parts_b) != 1:
        raise PreconditionViolated("B must lie inside a single part")
    (v,), (i0,) = parts_a, parts_b
    if (v, i0) not in blowup.base.arcs:
        raise PreconditionViolated(f"no base arc from part {v} to part {i0}")
    if not 1 <= len(b_set) <= n / k:
        raise PreconditionViolated(f"|B| = {len(b_set)} outside 1..n/k = {n / k:g}")
    if len(a_set) != n - len(b_set) * (k - 1):
        raise PreconditionViolated(f"|A| = {len(a_set)} but n - |B|(k-1) = {n - len(b_set) * (k - 1)}")
    count = sum(1 for x, y in d_prime.arcs if x in a_set and y in b_set)
    threshold = min(len(b_set), n ** (eps * min_girth))
    return {"arcs": count, "threshold": threshold, "exceeds": count > threshold}


def lemma3_experiment(params: SampleParams, trials: int, pairs_per_trial: int = 20) -> dict:
    """Random conforming (A, B): |B| uniform in 1..n/k first, then A and B uniform subsets."""
    start = time.perf_counter()
    bu = blow_up(params.base, params.n)
    if not bu.base.arcs:
        raise PreconditionViolated("base graph has no arcs")
    n, k = params.n, params.k
    base_arcs = bu.base.sorted_arcs
    records = []
    for t in range(trials):
        d = _sample(bu, params.p, params.seed + t)
        rng = np.random.default_rng((params.seed + t, 1))
        passed = 0
        for _ in range(pairs_per_trial):
            v, i0 = base_arcs[rng.integers(len(base_arcs))]
            b_size = int(rng.integers(1, n // k + 1))
            a_size = n - b_size * (k - 1)
            a_set = (v * n + rng.choice(n, a_size, replace=False)).tolist()
            b_set = (i0 * n + rng.choice(n, b_size, replace=False)).tolist()
            rep = lemma3_check(d, bu, a_set, b_set, k, params.eps, params.min_girth)
            passed += rep["exceeds"]
        records.append({"trial": t, "pairs": pairs_per_trial, "passed": passed})
    total = trials * pairs_per_trial
    return {
        "experiment": "lemma3",
        "params": params.to_dict(),
        "trials": records,
        "aggregate": {"pass_frequency": sum(r["passed"] for r in records) / total},
        "bounds": {"threshold_cap": n ** (params.eps * params.min_girth)},
        "pass": {"pass_frequency": None},
        "wall_clock_s": time.perf_counter() - start,
    }


def majority_factor(phi, psi, n: int, base_order: int, target_order: int, k: int):
    """Per part, the target vertex hit most often by `phi`.

    Returns ``(f, unique)`` where `unique` says every part has exactly one
    target vertex hit at least ``n/k`` times.
    """
    counts = np.zeros((base_order, target_order), dtype=np.int64)
    np.add.at(counts, (np.asarray(psi), np.asarray(phi)), 1)
    f = tuple(int(x) for x in counts.argmax(axis=1))
    unique = bool(np.all((counts >= n / k).sum(axis=1) == 1))
    return f, unique


@dataclass
class _Tally:
    checks: int = 0
    failures: int = 0

    def add(self, ok: bool):
        self.checks += 1
        self.failures += not ok

    def success(self):
        return None if self.checks == 0 else 1 - self.failures / self.checks


@dataclass
class _Target:
    tournament: OrientedGraph
    base_hom: tuple | None
    pointed: bool


def theorem1_demo(params: SampleParams, trials: int, hom_limit: int = 8) -> dict:
    """Empirical check of the pipeline's guarantees against all tournaments of order <= k.

    Per trial and tournament C:
      (i) girth of the output is at least min_girth;
      (ii-easy) if the base maps to C by f, then f∘psi maps the output to C;
      (ii-hard) if the base does not map to C, the output should not either;
      (iii) when C is base-pointed, each of the first `hom_limit` homomorphisms
      phi of the output factors as f∘psi with f chosen by majority per part.
    """
    start = time.perf_counter()
    base = params.base
    targets = []
    for order in range(1, params.k + 1):
        for t in enumerate_tournaments(order):
            targets.append(_Target(t, find_homomorphism(base, t), is_pointed(t, base)))
    tallies = {name: _Tally() for name in ("i", "ii_easy", "ii_hard", "iii")}
    records = []
    for trial in range(trials):
        out = run_pipeline(replace(params, seed=params.seed + trial))
        rec = {"trial": trial, "sampled_arcs": out.sampled_arcs, "removed": len(out.removed),
               "matching_achieved": out.matching_achieved}
        before = {name: (t.checks, t.failures) for name, t in tallies.items()}
        tallies["i"].add(girth(out.d_star) >= params.min_girth
                         and is_homomorphism(out.d_star, base, out.psi))
        for tg in targets:
            if tg.base_hom is not None:
                tallies["ii_easy"].add(is_homomorphism(out.d_star, tg.tournament, compose(out.psi, tg.base_hom)))
            else:
                tallies["ii_hard"].add(find_homomorphism(out.d_star, tg.tournament) is None)
            if tg.pointed:
                for phi in enumerate_homomorphisms(out.d_star, tg.tournament, hom_limit):
                    f, unique = majority_factor(phi, out.psi, params.n, base.order, tg.tournament.order, params.k)
                    tallies["iii"].add(unique and compose(out.psi, f) == phi)
        for name, t in tallies.items():
            checks, failures = before[name]
            rec[name] = {"checks": t.checks - checks, "failures": t.failures - failures}
        records.append(rec)
    return {
        "experiment": "theorem1",
        "params": params.to_dict(),
        "trials": records,
        "aggregate": {
            name: {"checks": t.checks, "failures": t.failures, "success_frequency": t.success()}
            for name, t in tallies.items()
        },
        "bounds": {},
        "pass": {"i": tallies["i"].failures == 0, "ii_easy": tallies["ii_easy"].failures == 0},
        "wall_clock_s": time.perf_counter() - start,
    }
