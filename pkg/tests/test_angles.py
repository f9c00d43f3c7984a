from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import TABLE1, load, small_corpus, table1, words
from veering import (
    QuadId, TautAngleStructure, Triangulation, enumerate_taut_angle_structures,
    is_generalised_angle_structure, layered_ptb, quad_sequence, semi_angle_check,
    strict_angle_structure)

# one tetrahedron whose edge 01 is glued only to itself
DEGREE_ONE = Triangulation((
    ((0, (1, 0, 2, 3)), (0, (1, 0, 2, 3)), (0, (0, 1, 3, 2)), (0, (0, 1, 3, 2))),
))

# two tetrahedra sharing faces 2 and 3, so edge 01 has degree two
DEGREE_TWO = Triangulation((
    ((0, (1, 0, 2, 3)), (0, (1, 0, 2, 3)), (1, (1, 0, 2, 3)), (1, (1, 0, 2, 3))),
    ((1, (1, 0, 2, 3)), (1, (1, 0, 2, 3)), (0, (1, 0, 2, 3)), (0, (1, 0, 2, 3))),
))


def brute_force_taut(tri):
    """Every slot tuple whose pi edges give each edge class exactly two pi angles."""
    out = []
    for slots in product(range(3), repeat=tri.tet_count):
        s = TautAngleStructure(slots)
        if all(sum(s.is_pi(q) for q in quad_sequence(tri, e).facing) == 2 for e in tri.edges):
            out.append(s)
    return out


def substitute(tri, alpha):
    """Residuals of the tetrahedron and edge equations, plus the smallest angle."""
    tets = [sum(alpha[QuadId(t, s)] for s in range(3)) - 1 for t in range(tri.tet_count)]
    edges = [sum(alpha[q] for q in quad_sequence(tri, e).facing) - 2 for e in tri.edges]
    return tets, edges, min(alpha.values())


def test_uniform_third_on_m004():
    tri = load("m004")
    alpha = {q: Fraction(1, 3) for q in tri.quads()}
    assert is_generalised_angle_structure(tri, alpha)
    assert semi_angle_check(tri, alpha) == "strict"


def test_uniform_third_fails_when_degrees_differ_from_six():
    tri = load("s227")
    alpha = {q: Fraction(1, 3) for q in tri.quads()}
    assert not is_generalised_angle_structure(tri, alpha)
    assert semi_angle_check(tri, alpha) == "invalid"


def test_missing_quad_raises():
    tri = load("m004")
    alpha = {q: Fraction(1, 3) for q in tri.quads()[1:]}
    with pytest.raises(ValueError):
        is_generalised_angle_structure(tri, alpha)


def test_semi_angle_categories(s227):
    tri, taut = s227
    assert semi_angle_check(tri, taut.angles()) == "taut"
    witness = strict_angle_structure(tri)
    assert semi_angle_check(tri, witness.assignment) == "strict"
    # halfway between taut and strict is still strict
    mixed = {q: (taut.angles()[q] + witness.assignment[q]) / 2 for q in tri.quads()}
    assert semi_angle_check(tri, mixed) == "strict"
    # push past the taut structure: angles leave [0, 1]
    beyond = {q: 2 * taut.angles()[q] - witness.assignment[q] for q in tri.quads()}
    assert semi_angle_check(tri, beyond) == "generalised"
    assert any(v > 1 for v in beyond.values())


def test_semi_category_on_m004():
    tri = load("m004")
    structures = enumerate_taut_angle_structures(tri)
    a, b = structures[0].angles(), structures[1].angles()
    mid = {q: (a[q] + b[q]) / 2 for q in tri.quads()}
    assert semi_angle_check(tri, mid) in ("semi", "strict")
    if any(v == 0 for v in mid.values()):
        assert semi_angle_check(tri, mid) == "semi"


def test_s227_contains_table_structure(s227):
    tri, taut = s227
    assert taut in enumerate_taut_angle_structures(tri)


@pytest.mark.parametrize("name", sorted(TABLE1))
def test_table_structures_enumerated(name):
    tri, taut = table1(name)
    assert taut in enumerate_taut_angle_structures(tri)


def test_enumeration_matches_brute_force_on_small_corpus():
    for name, tri in small_corpus():
        assert enumerate_taut_angle_structures(tri) == brute_force_taut(tri), name


@settings(max_examples=20, deadline=None)
@given(words.filter(lambda w: len(w) <= 5))
def test_enumeration_matches_brute_force_on_ptb(word):
    tri, taut = layered_ptb(word)
    found = enumerate_taut_angle_structures(tri)
    assert found == brute_force_taut(tri)
    assert taut in found


def test_enumeration_is_sorted_and_unique():
    tri = load("v3526")
    found = enumerate_taut_angle_structures(tri)
    assert found == sorted(set(found))


def test_labels_round_trip(s227):
    _, taut = s227
    assert TautAngleStructure.from_labels(taut.labels()) == taut
    assert TautAngleStructure.from_labels(["e13,e02", "e23,e01", "e01,e23", "e02,e13",
                                           "e12,e03", "e03,e12"]) == taut
    with pytest.raises(ValueError):
        TautAngleStructure.from_labels(["e01,e02"])


def test_degree_one_edge_has_no_taut_structure():
    assert [e.degree for e in DEGREE_ONE.edges].count(1) >= 1
    assert enumerate_taut_angle_structures(DEGREE_ONE) == []
    assert brute_force_taut(DEGREE_ONE) == []


def test_degree_two_edge_has_no_strict_structure():
    assert 2 in [e.degree for e in DEGREE_TWO.edges]
    assert strict_angle_structure(DEGREE_TWO) is None


def test_s227_strict_witness_by_substitution(s227):
    tri, _ = s227
    w = strict_angle_structure(tri)
    assert w is not None
    tets, edges, smallest = substitute(tri, w.assignment)
    assert tets == [0] * tri.tet_count and edges == [0] * len(tri.edges)
    assert smallest == w.slack > 0
    assert all(isinstance(v, Fraction) for v in w.assignment.values())
    assert w.slack == Fraction(1, 8)


def test_m004_strict_slack_is_a_third():
    # the regular ideal structure is optimal: every angle pi/3
    w = strict_angle_structure(load("m004"))
    assert w.slack == Fraction(1, 3)


def test_strict_answer_agrees_with_brute_force_midpoint_on_small_corpus():
    # if two taut structures average to a strict point, the LP must find one
    for name, tri in small_corpus():
        w = strict_angle_structure(tri)
        structures = enumerate_taut_angle_structures(tri)
        quads = tri.quads()
        if structures:
            avg = {q: sum(s.angles()[q] for s in structures) / len(structures) for q in quads}
            if all(0 < v < 1 for v in avg.values()):
                assert w is not None, name
        if w is not None:
            tets, edges, smallest = substitute(tri, w.assignment)
            assert not any(tets) and not any(edges) and smallest > 0, name
