from itertools import combinations, product

import pytest
from hypothesis import given, settings

from conftest import TABLE1, load, small_corpus, table1, words
from veering import (
    TautStructure, VeeringColouring, check_agol_ordering, enumerate_taut_angle_structures,
    find_taut_structures, find_veering_colouring, layered_ptb, one_sided_degrees,
    veering_report)
from veering.angles import TautAngleStructure
from veering.taut_veering import BLUE, RED, _top_diagonal, taut_tetrahedron_coorientations, veers_right
from veering.triangulation import SWAP01, edge_slot, mirror

NON_TAUT = sorted(set(TABLE1) - {"s227"})


def brute_force_coorientations(tri, taut):
    """All face coorientations, two in and two out, inducing taut and disagreeing across faces."""
    patterns = [tuple(v in ins for v in range(4)) for ins in combinations(range(4), 2)]

    def pi_slot(inward):
        # faces opposite c and d agree exactly when edge ab is a pi edge
        agree = [edge_slot(a, b) for a, b in combinations(range(4), 2)
                 if inward[[v for v in range(4) if v not in (a, b)][0]]
                 == inward[[v for v in range(4) if v not in (a, b)][1]]]
        return agree[0]

    per_tet = [[pat for pat in patterns if pi_slot(pat) == s] for s in taut.pi_slots]
    out = []
    for choice in product(*per_tet):
        if all(choice[t][i] != choice[u][p[i]]
               for t, row in enumerate(tri.gluings) for i, (u, p) in enumerate(row)):
            out.append(TautStructure(choice))
    return out


def test_s227_table_row(s227):
    tri, taut = s227
    col = find_veering_colouring(tri, taut)
    assert col is not None and col.flagged == ()
    assert "".join(col.colours) == "RRBBRR"
    structures = find_taut_structures(tri, taut)
    assert len(structures) == 2
    assert all(check_agol_ordering(tri, ts, col) for ts in structures)


@pytest.mark.parametrize("name", sorted(TABLE1))
def test_table_rows_are_veering(name):
    tri, taut = table1(name)
    assert find_veering_colouring(tri, taut) is not None


@pytest.mark.parametrize("name", NON_TAUT)
def test_non_taut_rows(name):
    tri, taut = table1(name)
    assert find_veering_colouring(tri, taut) is not None
    assert find_taut_structures(tri, taut) == []


def test_lone_tetrahedron_has_two_coorientations():
    for slot in range(3):
        pats = taut_tetrahedron_coorientations(slot)
        assert len(pats) == 2
        assert pats[0] == tuple(not v for v in pats[1])


def test_taut_structures_match_brute_force_on_small_corpus():
    for name, tri in small_corpus():
        for taut in enumerate_taut_angle_structures(tri):
            assert set(find_taut_structures(tri, taut)) == set(brute_force_coorientations(tri, taut)), name


def test_induced_angles(s227):
    tri, taut = s227
    for ts in find_taut_structures(tri, taut):
        for t in range(tri.tet_count):
            for a, b in combinations(range(4), 2):
                assert ts.induced_angle(t, a, b) == int(edge_slot(a, b) == taut.pi_slots[t])


def test_s227_one_sided_degrees(s227):
    tri, taut = s227
    degs = [one_sided_degrees(tri, taut, e) for e in tri.edges]
    for e, (i, j) in zip(tri.edges, degs):
        assert i + j + 2 == e.degree
        assert i >= 1 and j >= 1


def test_one_sided_degrees_rejects_non_taut_input():
    tri = load("m004")
    with pytest.raises(ValueError):
        one_sided_degrees(tri, TautAngleStructure((0, 0)), tri.edges[0])


def test_handedness_agrees_with_tau_in_a_lone_tetrahedron():
    # for every pi pair and both coorientations, a zero-angle edge veers
    # right exactly when the colour pattern calls it red
    for slot in range(3):
        blue_slot, red_slot = (slot + 1) % 3, (slot + 2) % 3
        for inward in taut_tetrahedron_coorientations(slot):
            top = _top_diagonal(inward)
            for x_, y_ in combinations(range(4), 2):
                s = edge_slot(x_, y_)
                if s == slot:
                    continue
                c, d = (v for v in range(4) if v not in (x_, y_))
                low_v, high_v = (d, c) if inward[c] else (c, d)
                x = x_ if frozenset((x_, high_v)) == top else y_
                y = y_ if x == x_ else x_
                assert frozenset((x, high_v)) == top
                assert veers_right(x, y, low_v, high_v) == (s == red_slot)
                assert s in (blue_slot, red_slot)


def test_single_edge_swap_breaks_agol_ordering(s227):
    tri, taut = s227
    col = find_veering_colouring(tri, taut)
    ts = find_taut_structures(tri, taut)[0]
    for e in range(len(col.colours)):
        bad = list(col.colours)
        bad[e] = RED if bad[e] == BLUE else BLUE
        assert not check_agol_ordering(tri, ts, VeeringColouring(tuple(bad)))
    assert not check_agol_ordering(tri, ts, col.swapped())


def test_agol_ordering_singles_out_the_veering_colouring():
    # over every colouring of every taut structure in the small corpus, the
    # ordering holds exactly for the veering colouring, when there is one
    for name, tri in small_corpus():
        for taut in enumerate_taut_angle_structures(tri):
            structures = find_taut_structures(tri, taut)
            if not structures:
                continue
            col = find_veering_colouring(tri, taut)
            for ts in structures:
                passing = [cs for cs in product((RED, BLUE), repeat=len(tri.edges))
                           if check_agol_ordering(tri, ts, VeeringColouring(cs))]
                assert passing == ([col.colours] if col else []), name


def test_mirror_swaps_colours(s227):
    tri, taut = s227
    m = mirror(tri)
    # SWAP01 fixes the pair slot 0 and exchanges slots 1 and 2
    m_taut = TautAngleStructure(tuple((0, 2, 1)[s] for s in taut.pi_slots))
    col, m_col = find_veering_colouring(tri, taut), find_veering_colouring(m, m_taut)
    assert m_col is not None
    for t in range(tri.tet_count):
        for a, b in combinations(range(4), 2):
            e = tri.edge_class_of(t, a, b)
            f = m.edge_class_of(t, SWAP01[a], SWAP01[b])
            assert col.colours[e] != m_col.colours[f]


@settings(max_examples=30, deadline=None)
@given(words)
def test_ptb_structural_lemmas(word):
    tri, taut = layered_ptb(word)
    col = find_veering_colouring(tri, taut)
    assert col is not None and col.flagged == ()
    assert all(e.degree >= 4 for e in tri.edges)
    assert all(min(one_sided_degrees(tri, taut, e)) >= 1 for e in tri.edges)
    structures = find_taut_structures(tri, taut)
    assert structures
    assert all(check_agol_ordering(tri, ts, col) for ts in structures)


@pytest.mark.parametrize("name", NON_TAUT)
def test_non_taut_rows_have_no_coorientation_by_brute_force(name):
    tri, taut = table1(name)
    assert brute_force_coorientations(tri, taut) == []


def test_veering_report_s227():
    rep = veering_report(load("s227"))
    assert rep.tet_count == 6 and rep.strict
    row = next(s for s in rep.structures if s.taut_angle == table1("s227")[1])
    assert row.veering and row.taut and row.strict
    assert rep.counts["taut_angle_structures"] == len(rep.structures)
    assert rep.counts["taut_and_veering"] >= 1


def test_veering_report_s438():
    tri, taut = table1("s438")
    row = next(s for s in veering_report(tri).structures if s.taut_angle == taut)
    assert row.veering and not row.taut
