from itertools import permutations

import pytest

from oriented_girth.graph import OrientedGraph, directed_cycle, is_tournament
from oriented_girth.hom import is_core
from oriented_girth.tournaments import (
    OrderTooLarge,
    bitcode,
    canonical_code,
    enumerate_tournaments,
    load_catalog_cache,
    oriented_chromatic_number,
    save_catalog_cache,
    tournament_from_code,
)
from oracles import brute_chi, labelled_tournaments, naive_class_count

# frozen from oracles.naive_class_count
NAIVE_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56}


@pytest.mark.parametrize("k", range(1, 7))
def test_catalog_counts_match_naive_oracle(k):
    assert len(enumerate_tournaments(k)) == NAIVE_COUNTS[k]


@pytest.mark.parametrize("k", [1, 3, 5])
def test_naive_oracle_spot_values(k):
    assert naive_class_count(k) == NAIVE_COUNTS[k]


def test_order_seven_count():
    assert len(enumerate_tournaments(7)) == 456


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        enumerate_tournaments(9)


def test_canonical_code_is_minimum_over_permutations():
    for k in range(1, 6):
        for arcs in labelled_tournaments(k):
            t = OrientedGraph(k, arcs)
            brute = min(bitcode(t, p) for p in permutations(range(k)))
            assert canonical_code(t) == brute


@pytest.mark.parametrize("k", range(1, 7))
def test_catalog_entries(k):
    cat = enumerate_tournaments(k)
    assert list(cat.codes) == sorted(set(cat.codes))
    for code, t in zip(cat.codes, cat):
        assert is_tournament(t) and t.order == k
        assert canonical_code(t) == code
        assert tournament_from_code(k, code) == t
        assert is_core(t)


def test_bitcode_round_trip():
    for arcs in labelled_tournaments(4):
        t = OrientedGraph(4, arcs)
        assert tournament_from_code(4, bitcode(t)) == t


def test_chromatic_number_examples():
    assert oriented_chromatic_number(directed_cycle(5)) == 5
    assert oriented_chromatic_number(directed_cycle(6)) == 3
    for t in enumerate_tournaments(5):
        assert oriented_chromatic_number(t) == 5
    assert oriented_chromatic_number(enumerate_tournaments(6).tournaments[-1], cap=5) is None
    assert oriented_chromatic_number(OrientedGraph(0)) == 0
    assert oriented_chromatic_number(OrientedGraph(3)) == 1


def test_chromatic_cap_limit():
    with pytest.raises(OrderTooLarge):
        oriented_chromatic_number(directed_cycle(3), cap=9)


def test_chromatic_number_against_labelled_oracle():
    # all oriented graphs on 4 vertices up to the relabelling-free listing
    from oracles import all_oriented_graphs

    for n in range(1, 5):
        for arcs in all_oriented_graphs(n):
            assert oriented_chromatic_number(OrientedGraph(n, arcs)) == brute_chi(n, arcs)


def test_catalog_cache_round_trip(tmp_path):
    path = tmp_path / "catalog.txt"
    assert not load_catalog_cache(path)
    save_catalog_cache(path, 5)
    lines = path.read_text().splitlines()
    assert lines[:4] == ["1:0", "2:0", "3:0", "3:2"]
    assert len(lines) == 1 + 1 + 2 + 4 + 12
    assert load_catalog_cache(path)
    assert len(enumerate_tournaments(5)) == 12


def test_catalog_cache_rejects_non_canonical(tmp_path):
    path = tmp_path / "catalog.txt"
    path.write_text("3:7\n")
    with pytest.raises(ValueError):
        load_catalog_cache(path)
