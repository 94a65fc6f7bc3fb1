"""Brute-force reference implementations, deliberately independent of the package."""

from itertools import permutations, product


def all_maps_homs(n, arcs, m, target_arcs):
    target = set(target_arcs)
    return [img for img in product(range(m), repeat=n) if all((img[u], img[v]) in target for u, v in arcs)]


def all_cycles(n, arcs):
    """Every directed cycle as a vertex tuple starting at its minimum vertex."""
    arcs = set(arcs)
    found = set()
    for size in range(2, n + 1):
        for perm in permutations(range(n), size):
            if perm[0] != min(perm):
                continue
            if all((perm[i], perm[(i + 1) % size]) in arcs for i in range(size)):
                found.add(perm)
    return found


def brute_girth(n, arcs):
    cycles = all_cycles(n, arcs)
    return min((len(c) for c in cycles), default=None)


def labelled_tournaments(k):
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for bits in product((0, 1), repeat=len(pairs)):
        yield frozenset((i, j) if b else (j, i) for (i, j), b in zip(pairs, bits))


def naive_class_count(k):
    """Isomorphism classes of k-tournaments: take each labelled one, mark its whole orbit."""
    seen = set()
    classes = 0
    for arcs in labelled_tournaments(k):
        if arcs in seen:
            continue
        classes += 1
        for perm in permutations(range(k)):
            seen.add(frozenset((perm[u], perm[v]) for u, v in arcs))
    return classes


def brute_chi(n, arcs):
    """Minimum k with a homomorphism into some labelled k-tournament, by full search."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for t in labelled_tournaments(k):
            if all_maps_homs(n, arcs, k, t):
                return k
    return None


def all_oriented_graphs(n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for states in product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (i, j), s in zip(pairs, states):
            if s == 1:
                arcs.append((i, j))
            elif s == 2:
                arcs.append((j, i))
        yield arcs
