"""Permutation parsing, group closure, and branch-divisor data."""

import itertools
from fractions import Fraction

import pytest

from permsing import (
    GorensteinReport,
    Permutation,
    PermutationGroup,
    branch_components,
    fixed_space_dimension,
    gorenstein_report,
    group_closure,
    group_from_name,
    is_pseudo_reflection,
    parse_generators,
    parse_permutation,
    transpositions,
)
from permsing.perm import CycleParseError

from helpers import fixed_dim_rank_mod_p, fixed_dim_rank_Q, transposition_distances


# ---------------------------------------------------------------------------
# parsing

def test_parse_transposition():
    assert parse_permutation("(1 2)", 4).images == (2, 1, 3, 4)


def test_parse_empty_is_identity():
    assert parse_permutation("", 3).images == (1, 2, 3)
    assert parse_permutation("   ", 3).images == (1, 2, 3)


def test_parse_cycle_product():
    assert parse_permutation("(1 2 3)(4 5)", 5).images == (2, 3, 1, 5, 4)


def test_parse_separators():
    assert parse_permutation("(1,2,3)", 3).images == (2, 3, 1)
    assert parse_permutation("(1, 2,  3)", 3).images == (2, 3, 1)
    assert parse_permutation("(1 2) (3 4)", 4).images == (2, 1, 4, 3)


def test_parse_singleton_cycle_fixes():
    assert parse_permutation("(2)", 3).images == (1, 2, 3)


def test_parse_errors():
    with pytest.raises(CycleParseError):
        parse_permutation("(1 5)", 4)  # out of range
    with pytest.raises(CycleParseError):
        parse_permutation("(0 1)", 4)  # entries are 1-based
    with pytest.raises(CycleParseError):
        parse_permutation("(1 2)(2 3)", 4)  # repeated across cycles
    with pytest.raises(CycleParseError):
        parse_permutation("(1 2", 4)  # malformed parentheses
    with pytest.raises(CycleParseError):
        parse_permutation("1 2", 4)
    with pytest.raises(CycleParseError):
        parse_permutation("()", 4)


def test_parse_generators_splits_on_semicolon():
    gens = parse_generators("(1 2);(1 2 3)", 3)
    assert [g.images for g in gens] == [(2, 1, 3), (2, 3, 1)]
    assert parse_generators("", 3)[0].is_identity()


def test_cycle_string_round_trip():
    for images in itertools.permutations(range(1, 6)):
        g = Permutation(images)
        assert parse_permutation(g.cycle_string(), 5) == g


# ---------------------------------------------------------------------------
# composition and closure

def test_composition_convention():
    a = parse_permutation("(1 2)", 3)
    b = parse_permutation("(2 3)", 3)
    assert (a * b)(3) == a(b(3)) == a(2) == 1
    assert a * a.inverse() == Permutation.identity(3)


def test_closure_order_two():
    G = group_closure([parse_permutation("(1 2)", 2)], 2)
    assert G.order == 2


def test_closure_empty_generators():
    assert group_closure([], 3).order == 1


def test_closure_klein_four():
    # brute-force expectation: the four products of the two generators
    a = parse_permutation("(1 2)(3 4)", 4)
    b = parse_permutation("(1 3)(2 4)", 4)
    G = group_closure([a, b], 4)
    assert G.order == 4
    assert G.elements == frozenset([Permutation.identity(4), a, b, a * b])


def test_closure_idempotent():
    for text, n in [("(1 2);(1 2 3)", 3), ("(1 2)(3 4);(1 3)(2 4)", 4), ("(1 2 3 4 5)", 5)]:
        G = PermutationGroup.from_text(text, n)
        again = group_closure(G.elements, n)
        assert again.elements == G.elements


def test_closure_mixed_degrees_rejected():
    with pytest.raises(ValueError):
        group_closure([parse_permutation("(1 2)", 2)], 3)


def test_lagrange_for_small_degrees():
    import math

    for n in range(1, 5):
        elements = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        for a, b in itertools.combinations(elements, 2):
            G = group_closure([a, b], n)
            assert math.factorial(n) % G.order == 0


# ---------------------------------------------------------------------------
# fixed spaces and pseudo-reflections

def test_fixed_space_examples():
    assert fixed_space_dimension(Permutation.identity(5)) == 5
    assert fixed_space_dimension(parse_permutation("(1 2)", 4)) == 3
    assert fixed_space_dimension(parse_permutation("(1 2 3)", 3)) == 1


def test_fixed_space_matches_matrix_rank_small():
    # the full S_7 sweep is an acceptance criterion; spot-check n <= 5 here
    for n in range(2, 6):
        for images in itertools.permutations(range(1, n + 1)):
            g = Permutation(images)
            expect = fixed_space_dimension(g)
            assert fixed_dim_rank_Q(g) == expect
            assert fixed_dim_rank_mod_p(g, 2) == expect
            assert fixed_dim_rank_mod_p(g, 3) == expect


def test_fixed_space_equals_degree_minus_transposition_distance():
    for n in range(2, 7):
        dist = transposition_distances(n)
        for images, steps in dist.items():
            assert fixed_space_dimension(Permutation(images)) == n - steps


def test_pseudo_reflection_examples():
    assert is_pseudo_reflection(parse_permutation("(1 2)", 4))
    assert not is_pseudo_reflection(parse_permutation("(1 2)(3 4)", 4))
    assert not is_pseudo_reflection(parse_permutation("(1 2 3)", 3))
    with pytest.raises(ValueError):
        is_pseudo_reflection(Permutation.identity(3))


def test_pseudo_reflection_iff_transposition():
    for n in range(2, 7):
        for images in itertools.permutations(range(1, n + 1)):
            g = Permutation(images)
            if g.is_identity():
                continue
            assert is_pseudo_reflection(g) == g.is_transposition()


# ---------------------------------------------------------------------------
# transpositions and branch components

def test_transpositions_examples():
    assert {g.images for g in transpositions(PermutationGroup.symmetric(3))} == {
        (2, 1, 3),
        (3, 2, 1),
        (1, 3, 2),
    }
    assert transpositions(PermutationGroup.klein_four(4)) == []
    G = PermutationGroup.from_text("(1 2);(3 4)", 4)
    assert {g.cycle_string() for g in transpositions(G)} == {"(1 2)", "(3 4)"}


def test_branch_components_examples():
    assert branch_components(PermutationGroup.symmetric(3)) == 1
    assert branch_components(PermutationGroup.klein_four(4)) == 0
    assert branch_components(PermutationGroup.from_text("(1 2);(3 4)", 4)) == 2


def test_branch_components_zero_iff_no_transpositions():
    for G in [
        PermutationGroup.symmetric(4),
        PermutationGroup.alternating(4),
        PermutationGroup.cyclic(4),
        PermutationGroup.from_text("(1 2);(3 4)", 4),
        PermutationGroup.trivial(4),
    ]:
        has = len(transpositions(G)) > 0
        assert (branch_components(G) > 0) == has
        report = gorenstein_report(G, 5)
        assert (report.boundary_coefficient is not None) == has


# ---------------------------------------------------------------------------
# Gorenstein reports

def test_gorenstein_s2_odd_characteristic():
    r = gorenstein_report(PermutationGroup.symmetric(2), 3)
    assert r.kx_index_divides == 2
    assert r.boundary_coefficient == Fraction(1, 2)
    assert r.b_cartier_index_divides == 2
    assert r.branch_component_count == 1


def test_gorenstein_s2_char_two():
    r = gorenstein_report(PermutationGroup.symmetric(2), 2)
    assert r.kx_index_divides == 1
    assert r.boundary_coefficient == Fraction(1)
    assert r.b_cartier_index_divides == 1
    assert r.branch_component_count == 1


def test_gorenstein_a3_char_five():
    # A_3 is even: independent parity check by counting inversions
    G = PermutationGroup.alternating(3)
    for g in G.elements:
        inversions = sum(
            1
            for i in range(1, 4)
            for j in range(i + 1, 4)
            if g(i) > g(j)
        )
        assert inversions % 2 == 0
    r = gorenstein_report(G, 5)
    assert r.kx_index_divides == 1
    assert r.boundary_coefficient is None
    assert r.b_cartier_index_divides is None
    assert r.branch_component_count == 0


def test_gorenstein_characteristic_validation():
    with pytest.raises(ValueError):
        gorenstein_report(PermutationGroup.symmetric(2), 4)
    with pytest.raises(ValueError):
        gorenstein_report(PermutationGroup.symmetric(2), -3)


def test_gorenstein_report_invariants_enforced():
    with pytest.raises(ValueError):
        GorensteinReport(3, None, None, 0)
    with pytest.raises(ValueError):
        GorensteinReport(1, Fraction(1, 2), 1, 1)
    with pytest.raises(ValueError):
        GorensteinReport(1, None, None, 2)
    with pytest.raises(ValueError):
        GorensteinReport(1, Fraction(1, 3), 2, 1)


def test_conjugation_invariance_of_branch_data():
    groups = [
        PermutationGroup.symmetric(3, 4),
        PermutationGroup.from_text("(1 2);(3 4)", 4),
        PermutationGroup.klein_four(4),
        PermutationGroup.cyclic(4),
    ]
    for G in groups:
        expected = branch_components(G)
        expected_report = gorenstein_report(G, 3)
        for images in itertools.permutations(range(1, 5)):
            s = Permutation(images)
            H = G.conjugate_by(s)
            assert branch_components(H) == expected
            assert gorenstein_report(H, 3) == expected_report


# ---------------------------------------------------------------------------
# presets

def test_group_presets():
    assert group_from_name("S4", 4).order == 24
    assert group_from_name("A4", 4).order == 12
    assert group_from_name("S3", 5).order == 6  # embedded, fixing 4 and 5
    assert group_from_name("cyclic:3", 3).order == 3
    assert group_from_name("klein4", 4).order == 4
    assert group_from_name("trivial", 6).order == 1
    with pytest.raises(ValueError):
        group_from_name("D4", 4)
    with pytest.raises(ValueError):
        group_from_name("S5", 4)  # does not fit in S_4
