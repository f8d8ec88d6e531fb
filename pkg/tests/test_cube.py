import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewcube.cube import (
    CoverFamily,
    CubePoint,
    Hyperplane,
    covered_set,
    covers,
    evaluate,
    is_skew,
    verify_cover,
)
from skewcube.errors import DimensionMismatch, DimensionTooLarge, EmptyFamily

nonzero_coeff = st.integers(-5, 5).filter(lambda v: v != 0)


@st.composite
def skew_planes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    a = tuple(draw(nonzero_coeff) for _ in range(n))
    b = draw(st.integers(-6, 6))
    return Hyperplane(a, b)


def brute_covered(plane, n):
    """Independent oracle: evaluate the affine form point by point."""
    out = set()
    for bits in range(1 << n):
        x = [-1 if (bits >> j) & 1 else 1 for j in range(n)]
        if sum(c * xi for c, xi in zip(plane.a, x)) + plane.b == 0:
            out.add(bits)
    return out


def test_eval_all_ones():
    p = Hyperplane((1, 1, 1), 0)
    assert evaluate(p, CubePoint(0, 3)) == 3


def test_eval_hand_sum():
    p = Hyperplane((1, 1, 1, 1, 2), 0)
    pt = CubePoint.from_coords([1, 1, -1, -1, 1])
    assert evaluate(p, pt) == 2


def test_eval_symmetric_cancellation():
    p = Hyperplane((1, -1), 0)
    pt = CubePoint.from_coords([-1, -1])
    assert evaluate(p, pt) == 0
    assert covers(p, pt)


def test_eval_rational_exact():
    p = Hyperplane((Fraction(1, 2), Fraction(-1, 3)), Fraction(1, 6))
    pt = CubePoint.from_coords([-1, 1])
    assert evaluate(p, pt) == Fraction(-1, 2) - Fraction(1, 3) + Fraction(1, 6)


def test_eval_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        evaluate(Hyperplane((1, 1), 0), CubePoint(0, 3))


def test_floats_rejected():
    with pytest.raises(TypeError):
        Hyperplane((1.0, 2), 0)


def test_covers_odd_sum_never_zero():
    p = Hyperplane((1, 1, 1), 0)
    assert all(not covers(p, CubePoint(bits, 3)) for bits in range(8))


def test_covers_two_dim():
    p = Hyperplane((1, 1), 0)
    assert covers(p, CubePoint.from_coords([1, -1]))
    assert not covers(p, CubePoint.from_coords([1, 1]))


def test_is_skew():
    assert is_skew(Hyperplane((1, 1, 1), 0))
    assert not is_skew(Hyperplane((1, 0, 1), 2))
    assert is_skew(Hyperplane((Fraction(1, 2), -3, 7), 0))


def test_covered_set_two_dim():
    got = covered_set(Hyperplane((1, 1), 0), 2)
    assert {p.bits for p in got} == {0b01, 0b10}


def test_covered_set_single_minus():
    got = covered_set(Hyperplane((1, 1, 1), -1), 3)
    assert {p.bits for p in got} == {0b001, 0b010, 0b100}
    assert all(p.weight == 1 for p in got)


def test_covered_set_powers_of_two_empty():
    assert covered_set(Hyperplane((1, 2, 4), 0), 3) == set()


def test_covered_set_rejects_mismatched_n():
    with pytest.raises(DimensionMismatch):
        covered_set(Hyperplane((1, 1), 0), 3)


def test_dimension_cap():
    with pytest.raises(DimensionTooLarge):
        covered_set(Hyperplane((1,) * 25, 0))


def test_empty_family_rejected():
    with pytest.raises(EmptyFamily):
        CoverFamily(())


def test_mixed_dimension_family_rejected():
    with pytest.raises(DimensionMismatch):
        CoverFamily((Hyperplane((1, 1), 0), Hyperplane((1, 1, 1), 0)))


def test_verify_single_plane_not_a_cover():
    report = verify_cover(CoverFamily((Hyperplane((1, 1), 0),)))
    assert not report.covered
    assert report.num_uncovered == 2
    assert [p.bits for p in report.uncovered_sample] == [0b00, 0b11]
    assert report.per_plane_counts == (2,)


def test_verify_report_consistency():
    fam = CoverFamily((Hyperplane((1, 1), 0), Hyperplane((1, -1), 0)))
    report = verify_cover(fam)
    assert report.covered and report.num_uncovered == 0
    assert report.uncovered_sample == ()


def test_verify_matches_union_of_covered_sets():
    planes = (
        Hyperplane((1, 2, -1), 0),
        Hyperplane((1, 1, 1), -1),
        Hyperplane((1, 1, 1), 1),
        Hyperplane((2, -1, -1), 0),
    )
    fam = CoverFamily(planes)
    union = set()
    for p in planes:
        union |= {q.bits for q in covered_set(p)}
    report = verify_cover(fam)
    assert report.covered == (len(union) == 8)
    assert report.num_uncovered == 8 - len(union)


def test_verify_workers_and_chunking_agree():
    fam = CoverFamily(
        (
            Hyperplane((1, 1, 1, 1), 0),
            Hyperplane((1, 1, 1, 1), 2),
            Hyperplane((1, 1, 1, 1), -2),
        )
    )
    base = verify_cover(fam)
    chunked = verify_cover(fam, chunk_bits=2)
    parallel = verify_cover(fam, workers=2, chunk_bits=2)
    assert base == chunked == parallel


def test_uncovered_sample_capped_at_32():
    # a plane of distinct powers of two covers nothing; all 64 points of
    # n = 6 are uncovered but the sample stays at 32, mask-ascending
    fam = CoverFamily((Hyperplane((1, 2, 4, 8, 16, 32), 0),))
    report = verify_cover(fam)
    assert report.num_uncovered == 64
    assert [p.bits for p in report.uncovered_sample] == list(range(32))


def test_middle_binomial_bound_structured_n14():
    middle = Hyperplane((1,) * 14, 0)
    assert len(covered_set(middle)) == math.comb(14, 7)


def test_bigint_fallback_agrees_with_int64_path():
    huge = 1 << 70
    small = Hyperplane((1, 1, -1), 0)
    scaled = Hyperplane((huge, huge, -huge), 0)
    assert {p.bits for p in covered_set(small)} == {p.bits for p in covered_set(scaled)}
    r1 = verify_cover(CoverFamily((small,)))
    r2 = verify_cover(CoverFamily((scaled,)))
    assert (r1.num_uncovered, r1.per_plane_counts) == (r2.num_uncovered, r2.per_plane_counts)


@settings(max_examples=60, deadline=None)
@given(skew_planes())
def test_covered_set_matches_bruteforce(plane):
    assert {p.bits for p in covered_set(plane)} == brute_covered(plane, plane.n)


@settings(max_examples=60, deadline=None)
@given(skew_planes())
def test_covered_set_middle_binomial_bound(plane):
    n = plane.n
    assert len(covered_set(plane)) <= math.comb(n, n // 2)


@settings(max_examples=40, deadline=None)
@given(skew_planes(max_n=5), st.data())
def test_sign_equivariance(plane, data):
    j = data.draw(st.integers(0, plane.n - 1))
    flipped = Hyperplane(
        tuple(-c if i == j else c for i, c in enumerate(plane.a)), plane.b
    )
    want = {p.bits ^ (1 << j) for p in covered_set(plane)}
    assert {p.bits for p in covered_set(flipped)} == want


@settings(max_examples=40, deadline=None)
@given(skew_planes(max_n=5), st.data())
def test_permutation_equivariance(plane, data):
    n = plane.n
    perm = data.draw(st.permutations(range(n)))
    permuted = Hyperplane(tuple(plane.a[perm[j]] for j in range(n)), plane.b)

    def relabel(bits):
        out = 0
        for j in range(n):
            if (bits >> perm[j]) & 1:
                out |= 1 << j
        return out

    want = {relabel(p.bits) for p in covered_set(plane)}
    assert {p.bits for p in covered_set(permuted)} == want


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_antichain_for_positive_planes(n, data):
    a = tuple(data.draw(st.integers(1, 5)) for _ in range(n))
    b = data.draw(st.integers(-n, n))
    masks = [p.bits for p in covered_set(Hyperplane(a, b))]
    for p in masks:
        for q in masks:
            if p != q:
                assert p & ~q != 0  # p is not a subset of q
