"""Effectivity, decomposition enumeration, the A1-A3 conditions, branches."""

import itertools

import pytest

from ratsurf import (
    Branch,
    Decomposition,
    EnumerationCapError,
    UnsupportedBranchError,
    blowup_hirzebruch,
    check_a1,
    check_a2,
    check_a3,
    classify_branch,
    divisor,
    enumerate_decompositions,
    enumerate_effective_below,
    arithmetic_genus,
    hirzebruch,
    is_effective,
    linear_system_dim,
    projective_plane,
)

P2 = projective_plane()
F0 = hirzebruch(0)
F1 = hirzebruch(1)


# ----------------------------------------------------------------- effectivity


def test_is_effective_examples():
    assert is_effective(F1, divisor(1, 0))
    assert not is_effective(P2, divisor(-1))
    assert not is_effective(F0, divisor(2, -1))
    assert is_effective(P2, divisor(0))  # the zero class has a section
    assert is_effective(blowup_hirzebruch(0), divisor(1, 1, -1))
    assert not is_effective(blowup_hirzebruch(1), divisor(2, 0, -1))


def test_is_effective_agrees_with_section_count():
    from ratsurf import h0_class

    for d in range(-6, 7):
        assert is_effective(P2, divisor(d)) == (h0_class(P2, divisor(d)) > 0)
    for e in (0, 1, 2, 3):
        surface = hirzebruch(e)
        for a in range(-4, 5):
            for b in range(-4, 5):
                got = is_effective(surface, divisor(a, b))
                assert got == (h0_class(surface, divisor(a, b)) > 0)


# ----------------------------------------------------------------- enumeration


def test_enumerate_effective_below_examples():
    assert enumerate_effective_below(P2, divisor(2)) == [divisor(1), divisor(2)]
    assert set(enumerate_effective_below(F0, divisor(1, 1))) == {
        divisor(0, 1),
        divisor(1, 0),
        divisor(1, 1),
    }
    assert set(enumerate_effective_below(F1, divisor(2, 0))) == {
        divisor(1, 0),
        divisor(2, 0),
    }


def test_enumerate_effective_below_is_sorted_and_consistent():
    for surface, L in [(P2, divisor(4)), (F0, divisor(2, 3)), (F1, divisor(2, 4))]:
        below = enumerate_effective_below(surface, L)
        assert below == sorted(below, key=lambda d: d.coeffs)
        for d in below:
            assert not d.is_zero
            assert is_effective(surface, d)
            assert is_effective(surface, L - d)


def test_enumerate_effective_below_on_blowup():
    surface = blowup_hirzebruch(0)
    below = enumerate_effective_below(surface, divisor(0, 2, -1))
    assert divisor(0, 1, -1) in below  # the strict transform of the fiber
    assert divisor(0, 1, 0) in below
    assert divisor(0, 2, -1) in below
    assert divisor(0, 0, -1) not in below  # -E alone has no sections


def test_enumerate_effective_below_rejects_non_effective():
    with pytest.raises(ValueError):
        enumerate_effective_below(P2, divisor(-2))


def oracle_decompositions(surface, L):
    """Exponential-time oracle: filter raw multisets of effective classes."""
    candidates = enumerate_effective_below(surface, L)
    weight = sum(abs(c) for c in L.coeffs)
    found = set()
    for size in range(2, weight + 1):
        for combo in itertools.combinations_with_replacement(candidates, size):
            total = combo[0]
            for part in combo[1:]:
                total = total + part
            if total == L:
                found.add(tuple(sorted(p.coeffs for p in combo)))
    return found


def test_enumerate_decompositions_examples():
    assert enumerate_decompositions(P2, divisor(2)) == [
        Decomposition((divisor(1), divisor(1)))
    ]
    assert enumerate_decompositions(P2, divisor(3)) == [
        Decomposition((divisor(1), divisor(1), divisor(1))),
        Decomposition((divisor(1), divisor(2))),
    ]
    assert enumerate_decompositions(F0, divisor(0, 2)) == [
        Decomposition((divisor(0, 1), divisor(0, 1)))
    ]


def test_enumerate_decompositions_against_oracle():
    cases = [
        (P2, divisor(4)),
        (F0, divisor(2, 2)),
        (F1, divisor(2, 2)),
        (F1, divisor(1, 3)),
        (hirzebruch(2), divisor(2, 2)),
    ]
    for surface, L in cases:
        got = {tuple(p.coeffs for p in dec.parts) for dec in enumerate_decompositions(surface, L)}
        assert got == oracle_decompositions(surface, L)


def test_decomposition_parts_sum_and_dedupe():
    for surface, L in [(P2, divisor(5)), (F0, divisor(2, 3))]:
        decs = enumerate_decompositions(surface, L)
        assert len(decs) == len(set(decs))
        for dec in decs:
            assert dec.total() == L
            assert len(dec.parts) >= 2
            assert all(not p.is_zero for p in dec.parts)


def test_decomposition_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_decompositions(P2, divisor(25))
    # the cap counts absolute values
    with pytest.raises(EnumerationCapError):
        enumerate_decompositions(F0, divisor(13, 12))


# ------------------------------------------------------------------ conditions


def test_a1_on_plane():
    for d in (3, 4, 5):
        report = check_a1(P2, divisor(d), divisor(1))
        assert report.passed
        assert report.witness is None


def test_a1_on_f1_with_section_exceptions():
    report = check_a1(F1, divisor(2, 4), divisor(1, 2))
    assert report.passed
    assert any("rigid section" in line for line in report.details)


def test_a1_on_f0():
    report = check_a1(F0, divisor(2, 2), divisor(1, 1))
    assert report.passed


def test_a1_rejects_bad_inputs():
    with pytest.raises(ValueError):
        check_a1(F0, divisor(2, 2), divisor(0, 1))  # not very ample
    with pytest.raises(UnsupportedBranchError):
        check_a1(blowup_hirzebruch(0), divisor(1, 1, -1), divisor(1, 1, 0))


def test_a1_failure_has_witness():
    # On F_1 only G and 2G are excepted: 3G pairs to zero and fails.
    report = check_a1(F1, divisor(3, 0), divisor(1, 2))
    assert not report.passed
    assert report.witness == divisor(3, 0)
    # On F_0 there are no exceptions, so with H = G+2F the class G fails.
    report = check_a1(F0, divisor(2, 0), divisor(1, 2))
    assert not report.passed
    assert report.witness == divisor(1, 0)


def test_a2_on_plane():
    report = check_a2(P2, divisor(3))
    assert report.passed
    line = next(s for s in report.details if s.startswith("{H, 2H}"))
    assert "9 <= 10" in line
    # on 2H the genus sub-check is trivially clean (all genera <= 0), even
    # though the dimension inequality itself fails for {H, H}
    report = check_a2(P2, divisor(2))
    assert "no positive-genus class sits below a genus <= 0 class" in report.details
    assert not report.passed


def test_a2_on_hirzebruch():
    assert check_a2(F0, divisor(2, 2)).passed
    assert check_a2(F1, divisor(2, 4)).passed


def test_a2_subcheck_equivalence_with_brute_force():
    cases = [
        (P2, divisor(d)) for d in range(1, 7)
    ] + [
        (F0, divisor(a, b)) for a in range(3) for b in range(4) if (a, b) != (0, 0)
    ] + [
        (F1, divisor(a, b)) for a in range(3) for b in range(4) if (a, b) != (0, 0)
    ]
    for surface, L in cases:
        below = enumerate_effective_below(surface, L)
        if len(below) > 50:
            continue
        genus = {d.coeffs: arithmetic_genus(surface, d) for d in below}
        # oracle (i): no genus <= 0 class dominates a positive-genus class
        oracle_i = True
        for d1 in below:
            for d2 in below:
                gap = d1 - d2
                if all(c >= 0 for c in gap.coeffs) and is_effective(surface, gap):
                    if genus[d1.coeffs] <= 0 < genus[d2.coeffs]:
                        oracle_i = False
        # oracle (ii): the dimension inequality over every decomposition
        bound = linear_system_dim(surface, L) + arithmetic_genus(surface, L)
        oracle_ii = all(
            sum(linear_system_dim(surface, p) for p in dec.parts)
            + sum(max(genus[p.coeffs], 0) for p in dec.parts)
            + 2
            <= bound
            for dec in enumerate_decompositions(surface, L)
        )
        assert check_a2(surface, L).passed == (oracle_i and oracle_ii)


def test_a3_examples():
    assert check_a3(P2, divisor(3)).passed
    assert check_a3(F0, divisor(2, 2)).passed
    report = check_a3(F0, divisor(0, 2))
    assert not report.passed
    assert report.witness is not None


def test_a3_tight_cases():
    # the worst splits sit exactly on the codimension-2 boundary
    report = check_a3(F0, divisor(2, 2))
    assert any("dim sum 6 <= 6" in line for line in report.details)
    report = check_a3(F1, divisor(2, 3))
    assert report.passed


def test_conditions_pass_on_all_example_classes():
    examples = (
        [(P2, divisor(d), divisor(1)) for d in (3, 4, 5)]
        + [(F0, divisor(2, n), divisor(1, 1)) for n in (2, 3, 4)]
        + [(F1, divisor(2, n), divisor(1, 2)) for n in (3, 4)]
    )
    for surface, L, ample in examples:
        assert check_a1(surface, L, ample).passed
        assert check_a2(surface, L).passed
        assert check_a3(surface, L).passed


# -------------------------------------------------------------------- branches


def test_classify_branch_examples():
    assert classify_branch(P2, divisor(2)) == Branch.GENUS_NONPOSITIVE
    assert classify_branch(P2, divisor(3)) == Branch.GENUS_ONE
    assert classify_branch(P2, divisor(4)) == Branch.POSITIVE_GENUS_GENERAL
    assert classify_branch(F1, divisor(2, 4)) == Branch.GENUS_TWO
    assert classify_branch(F0, divisor(2, 3)) == Branch.GENUS_TWO
    assert classify_branch(F0, divisor(2, 2)) == Branch.GENUS_ONE
    assert classify_branch(F1, divisor(2, 3)) == Branch.GENUS_ONE
    assert classify_branch(F0, divisor(2, 5)) == Branch.POSITIVE_GENUS_GENERAL
    # e outside {0, 1} is not part of the verified positive-genus families
    assert classify_branch(hirzebruch(2), divisor(2, 7)) == Branch.UNSUPPORTED


def test_classify_branch_genus_nonpositive_families():
    # plane: lines and conics
    for d in (1, 2):
        assert classify_branch(P2, divisor(d)) == Branch.GENUS_NONPOSITIVE
    # Hirzebruch: nF, nG, G+nF for any n >= 1
    for e in (0, 1, 2):
        surface = hirzebruch(e)
        for n in (1, 2, 3):
            assert classify_branch(surface, divisor(0, n)) == Branch.GENUS_NONPOSITIVE
            assert classify_branch(surface, divisor(n, 0)) == Branch.GENUS_NONPOSITIVE
            assert classify_branch(surface, divisor(1, n)) == Branch.GENUS_NONPOSITIVE


def test_classify_branch_blowup_classes():
    # the five point-decorated classes, wherever they are effective
    cases = [
        (0, divisor(0, 1, 0)),
        (0, divisor(1, 0, 0)),
        (0, divisor(0, 2, -1)),
        (0, divisor(2, 0, -1)),
        (0, divisor(1, 1, -1)),
        (1, divisor(0, 1, 0)),
        (1, divisor(1, 0, 0)),
        (1, divisor(0, 2, -1)),
        (1, divisor(1, 1, -1)),
    ]
    for e, L in cases:
        assert classify_branch(blowup_hirzebruch(e), L) == Branch.GENUS_NONPOSITIVE


def test_classify_branch_rejects_non_effective():
    with pytest.raises(ValueError):
        classify_branch(P2, divisor(-3))
