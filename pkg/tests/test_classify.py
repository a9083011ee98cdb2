"""Certificate engine: verdicts, traces, and soundness on small groups."""

import itertools
import json
from fractions import Fraction

import pytest

from permsing import (
    CERTIFIED,
    FALSE,
    NEG_INF,
    TRUE,
    ExtHalf,
    Permutation,
    PermutationGroup,
    certify_canonical_no_transposition,
    classify,
    discrepancy_reduction,
    pair_status,
    v_of_discriminant,
)
from permsing.classify import (
    ANCHOR_CANONICAL_FROM_STRATA,
    ANCHOR_DISCREPANCY_REDUCTION,
    ANCHOR_GORENSTEIN_INDEX,
    ANCHOR_KLT_FAILS_REDUCED_BOUNDARY,
    ANCHOR_KLT_FROM_CANONICAL,
    ANCHOR_KLT_FROM_DECAY,
    ANCHOR_LC_FROM_BOUNDED_SUP,
    ANCHOR_OFF_BOUNDARY,
    ANCHOR_STRINGY_BOUND,
)

from helpers import all_subgroups


def test_v_of_discriminant():
    assert v_of_discriminant(0) == ExtHalf(0)
    assert v_of_discriminant(3) == ExtHalf(Fraction(3, 2))
    assert v_of_discriminant(4) == ExtHalf(2)
    with pytest.raises(ValueError):
        v_of_discriminant(-1)


def test_certify_examples():
    cert = certify_canonical_no_transposition(4, 2)
    assert cert.ok and cert.worst_value == ExtHalf(-1)
    cert = certify_canonical_no_transposition(3, 3)
    assert cert.ok and cert.worst_value == ExtHalf(-1) and cert.worst_partition == (3,)
    cert = certify_canonical_no_transposition(2, 7)
    assert cert.ok and cert.worst_value == NEG_INF and cert.worst_partition == (2,)


def test_certify_holds_everywhere_small():
    for p in (0, 2, 3, 5, 7):
        for n in range(1, 11):
            assert certify_canonical_no_transposition(n, p).ok, (n, p)


def test_pair_status_examples():
    s = pair_status(5, 3, True)
    assert (s.klt, s.lc) == (TRUE, TRUE)
    s = pair_status(2, 2, True)
    assert (s.klt, s.lc) == (FALSE, TRUE)
    s = pair_status(4, 2, False)
    assert (s.klt, s.lc) == (TRUE, TRUE)


def test_discrepancy_reduction_examples():
    assert discrepancy_reduction(5, "klt", 2, Fraction(1, 2)) == ExtHalf(0)
    assert discrepancy_reduction(2, "lc", 1, Fraction(1)) == ExtHalf(0)
    assert discrepancy_reduction(3, "klt", 2, Fraction(1, 2)) == ExtHalf(0)


def test_discrepancy_reduction_errors():
    with pytest.raises(ValueError):
        discrepancy_reduction(5, "klt", None, None)  # empty boundary
    with pytest.raises(ValueError):
        discrepancy_reduction(5, "terminal", 2, Fraction(1, 2))
    with pytest.raises(ValueError):
        discrepancy_reduction(5, "klt", 3, Fraction(1, 2))


# ---------------------------------------------------------------------------
# classify

def test_classify_s2_char_two():
    report = classify(PermutationGroup.symmetric(2), 2)
    assert report.canonical == CERTIFIED
    assert report.pair_klt == FALSE
    assert report.pair_lc == TRUE
    assert report.stringy_dim_bound == ExtHalf(2)
    gor = report.gorenstein
    assert gor.kx_index_divides == 1
    assert gor.boundary_coefficient == Fraction(1)
    assert gor.b_cartier_index_divides == 1
    assert gor.branch_component_count == 1
    anchors = [t.anchor for t in report.trace]
    assert ANCHOR_DISCREPANCY_REDUCTION in anchors
    assert ANCHOR_OFF_BOUNDARY in anchors
    assert ANCHOR_KLT_FAILS_REDUCED_BOUNDARY in anchors


def test_classify_a4_char_two():
    report = classify(PermutationGroup.alternating(4), 2)
    assert report.canonical == CERTIFIED
    assert not report.has_transposition
    assert report.pair_klt == TRUE  # derived from the canonical certificate
    anchors = [t.anchor for t in report.trace]
    assert ANCHOR_CANONICAL_FROM_STRATA in anchors
    assert ANCHOR_KLT_FROM_CANONICAL in anchors


def test_classify_trivial_group():
    report = classify(PermutationGroup.trivial(1), 5)
    assert report.canonical == CERTIFIED
    assert report.stringy_dim_bound == NEG_INF
    assert report.nonfree_locus_dim_bound is None


def test_classify_cyclic3_char_three():
    report = classify(PermutationGroup.cyclic(3), 3)
    assert report.canonical == CERTIFIED
    assert report.pair_klt == TRUE
    assert report.pair_lc == TRUE


def test_classify_validates_characteristic():
    with pytest.raises(ValueError):
        classify(PermutationGroup.symmetric(2), 6)


def test_classify_nonfree_locus_bound():
    report = classify(PermutationGroup.symmetric(3), 0)
    # a transposition fixes a hyperplane
    assert report.nonfree_locus_dim_bound == 2


def test_trace_anchors_nonempty_and_verdicts_justified():
    groups = [
        PermutationGroup.symmetric(2),
        PermutationGroup.symmetric(4),
        PermutationGroup.alternating(4),
        PermutationGroup.klein_four(4),
        PermutationGroup.cyclic(3),
        PermutationGroup.trivial(2),
    ]
    for G in groups:
        for p in (0, 2, 3, 5):
            report = classify(G, p)
            anchors = [t.anchor for t in report.trace]
            assert all(anchors)
            assert ANCHOR_LC_FROM_BOUNDED_SUP in anchors  # lc verdict
            assert ANCHOR_GORENSTEIN_INDEX in anchors  # gorenstein data
            assert ANCHOR_STRINGY_BOUND in anchors  # stringy bound
            if report.has_transposition:
                assert ANCHOR_DISCREPANCY_REDUCTION in anchors  # canonical verdict
            else:
                assert ANCHOR_CANONICAL_FROM_STRATA in anchors
            if report.pair_klt == TRUE:
                assert ANCHOR_KLT_FROM_DECAY in anchors or ANCHOR_KLT_FROM_CANONICAL in anchors
            if report.pair_klt == FALSE:
                assert ANCHOR_KLT_FAILS_REDUCED_BOUNDARY in anchors


def test_classify_conjugation_invariance():
    groups = [
        PermutationGroup.symmetric(3, 4),
        PermutationGroup.klein_four(4),
        PermutationGroup.from_text("(1 2);(3 4)", 4),
        PermutationGroup.cyclic(4),
    ]
    for G in groups:
        for p in (0, 2, 3):
            base = classify(G, p)
            for images in itertools.permutations(range(1, 5)):
                H = G.conjugate_by(Permutation(images))
                other = classify(H, p)
                assert (other.canonical, other.pair_klt, other.pair_lc) == (
                    base.canonical,
                    base.pair_klt,
                    base.pair_lc,
                )
                assert other.stringy_dim_bound == base.stringy_dim_bound
                assert other.gorenstein == base.gorenstein


def test_report_invariants_enforced():
    base = classify(PermutationGroup.symmetric(2), 2)
    import dataclasses

    with pytest.raises(ValueError):
        dataclasses.replace(base, pair_lc="UNKNOWN")  # CERTIFIED needs lc
    with pytest.raises(ValueError):
        dataclasses.replace(base, p=3)  # klt FALSE only for p = 2 boundaries
    tf = classify(PermutationGroup.klein_four(4), 2)
    with pytest.raises(ValueError):
        dataclasses.replace(tf, pair_klt="UNKNOWN")  # empty boundary needs klt
    with pytest.raises(ValueError):
        dataclasses.replace(base, canonical="NOT CANONICAL")  # no such verdict


def test_report_json_is_stable_and_round_trips():
    report = classify(PermutationGroup.symmetric(2), 2)
    blob = json.dumps(report.as_json(), sort_keys=True)
    assert json.dumps(json.loads(blob), sort_keys=True) == blob
    data = json.loads(blob)
    assert data["canonical"] == "CERTIFIED"
    assert data["pair_klt"] == "FALSE"
    assert data["stringy_dim_bound"] == {"finite": True, "value": {"num": 2, "den": 1}}


def test_soundness_sweep_small_degrees():
    # the full n <= 5 sweep is an acceptance criterion; here n <= 4
    for n in range(1, 5):
        for G in all_subgroups(n):
            for p in (0, 2, 3, 5):
                report = classify(G, p)
                assert report.canonical == CERTIFIED, (n, G, p)
                assert report.pair_lc == TRUE
                if p != 2:
                    assert report.pair_klt == TRUE
