"""Edge cuts, tightness, barriers, 2-separations."""

from itertools import combinations

import pytest

from matchcov import (
    barriers,
    edge_cut,
    is_matching_covered,
    is_robust,
    is_separating,
    is_tight,
    maximal_barriers,
    two_separations,
)
from matchcov.errors import EmptyShoreError
from matchcov.zoo import complete_graph, cycle_graph, petersen_graph, prism_graph
from conftest import brute_perfect_matchings


def _proper_shores(n):
    for size in range(1, n):
        yield from combinations(range(n), size)


def test_edge_cut_boundary():
    g = cycle_graph(6)
    ec = edge_cut(g, [0, 1, 2])
    assert ec.shore == frozenset({0, 1, 2})
    assert len(ec.boundary) == 2
    for e in ec.boundary:
        u, v = g.endpoints(e)
        assert (u in ec.shore) != (v in ec.shore)


def test_edge_cut_rejects_degenerate_shores():
    g = cycle_graph(4)
    with pytest.raises(EmptyShoreError):
        edge_cut(g, [])
    with pytest.raises(EmptyShoreError):
        edge_cut(g, range(4))


def test_tight_against_definition(connected_simple_upto_6):
    for g in connected_simple_upto_6:
        if not is_matching_covered(g) or g.n < 4:
            continue
        pms = brute_perfect_matchings(g)
        for shore in _proper_shores(g.n):
            boundary = set(edge_cut(g, shore).boundary)
            expect = all(len(pm & boundary) == 1 for pm in pms)
            assert is_tight(g, shore) == expect


def test_single_vertex_cuts_are_tight():
    for g in (complete_graph(4), prism_graph(), cycle_graph(6), petersen_graph()):
        for v in range(g.n):
            assert is_tight(g, [v])


def test_c6_has_nontrivial_tight_cut():
    g = cycle_graph(6)
    assert is_tight(g, [0, 1, 2])
    assert not is_tight(g, [0, 1])  # odd boundary parity never tight
    assert is_separating(g, [0, 1, 2])
    # tight cuts are never robust
    assert not is_robust(g, [0, 1, 2])


def test_bricks_have_only_trivial_tight_cuts():
    for g in (complete_graph(4), prism_graph(), petersen_graph()):
        for shore in _proper_shores(g.n):
            if len(shore) == 1 or len(shore) == g.n - 1:
                continue
            assert not is_tight(g, shore), f"nontrivial tight cut {shore}"


def test_barriers_against_definition(connected_simple_upto_6):
    def odd_components(g, removed):
        rest = sorted(set(range(g.n)) - set(removed))
        sub = g.induced(rest)
        comps = []
        seen = set()
        for v in range(sub.n):
            if v in seen:
                continue
            mask = sub.component_mask(v)
            comp = {i for i in range(sub.n) if mask >> i & 1}
            seen |= comp
            comps.append(comp)
        return sum(1 for c in comps if len(c) % 2)

    for g in connected_simple_upto_6:
        if not is_matching_covered(g) or g.n < 4:
            continue
        expect = set()
        for size in range(1, g.n // 2 + 1):
            for cand in combinations(range(g.n), size):
                if odd_components(g, cand) == len(cand):
                    expect.add(frozenset(cand))
        got = {b.vertices for b in barriers(g)}
        assert got == expect


def test_maximal_barriers_are_maximal():
    for g in (complete_graph(4), prism_graph(), cycle_graph(6)):
        all_b = {b.vertices for b in barriers(g)}
        maximal = {b.vertices for b in maximal_barriers(g)}
        assert maximal <= all_b
        for b in maximal:
            assert not any(b < other for other in all_b)
        for b in all_b:
            assert any(b <= other for other in maximal)


def test_maximal_barriers_of_mc_graphs_are_independent(connected_simple_upto_6):
    for g in connected_simple_upto_6:
        if not is_matching_covered(g) or g.n < 4:
            continue
        for b in maximal_barriers(g):
            verts = sorted(b.vertices)
            assert g.induced(verts).m == 0, f"dependent maximal barrier {verts}"


def test_two_separations():
    assert two_separations(prism_graph()) == ()  # 3-connected
    got = two_separations(cycle_graph(6))
    assert got, "C6 has 2-separations"
    for pair in got:
        assert len(pair) == 2
        rest = sorted(set(range(6)) - set(pair))
        sub = cycle_graph(6).induced(rest)
        # all components even
        seen = set()
        for v in range(sub.n):
            if v in seen:
                continue
            mask = sub.component_mask(v)
            comp = {i for i in range(sub.n) if mask >> i & 1}
            seen |= comp
            assert len(comp) % 2 == 0


def test_separating_cut_in_c6():
    g = cycle_graph(6)
    # both shore contractions of {0,1,2} are squares, hence matching covered
    assert is_separating(g, [0, 1, 2])
    h, _ = g.contract([0, 1, 2])
    assert h.n == 4 and is_matching_covered(h)
