import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewcube.errors import (
    BadModulus,
    BadSubsetSize,
    DegreeTooHigh,
    DimensionMismatch,
    MissingValue,
    OddModulus,
)
from skewcube.fourier import inverse_wht, random_poly, w_set, wht
from skewcube.interpolation import (
    _support_distribution,
    build_scheme,
    chunk_layout,
    recover_coefficient,
    vanishing_dimension,
)
from skewcube.subsets import mask_of


def test_layout_canonical_small():
    lay = chunk_layout(3, 2, 1, {2})
    assert lay.chunks == ((1, 2),)
    assert lay.extra == (3,)
    assert lay.rest == ()
    assert lay.canonical_order == (1, 2, 3)


def test_layout_two_chunks():
    lay = chunk_layout(5, 2, 2, {2, 4})
    assert lay.chunks == ((1, 2), (3, 4))
    assert lay.extra == (5,)
    assert lay.rest == ()


def test_layout_relabels_general_subset():
    lay = chunk_layout(7, 2, 2, {1, 7})
    # subset elements land at the chunk ends, everything else fills ascending
    assert lay.chunks == ((2, 1), (3, 7))
    assert lay.extra == (4,)
    assert lay.rest == (5, 6)
    assert sorted(sum(lay.chunks, ()) + lay.extra + lay.rest) == list(range(1, 8))


def test_layout_degree_too_high():
    with pytest.raises(DegreeTooHigh):
        chunk_layout(3, 2, 2, {1, 2})


def test_layout_odd_modulus():
    with pytest.raises(OddModulus):
        chunk_layout(6, 3, 1, {3})


def test_layout_bad_subset():
    with pytest.raises(BadSubsetSize):
        chunk_layout(6, 2, 2, {1})
    with pytest.raises(BadSubsetSize):
        chunk_layout(6, 2, 1, {9})


def test_scheme_atoms_match_hand_enumeration():
    # the four atoms of the (n=3, m=2, d=1, S={2}) measure, derived by hand
    # from the chunk law: support {(+,+,+) w.p. 1/2, (-,+,-) w.p. 1/2},
    # then expanded over the chunk sign twist
    scheme = build_scheme(3, 2, 1, {2})
    got = {(pt.coords(), w, s) for pt, w, s in scheme.atoms}
    q = Fraction(1, 4)
    assert got == {
        ((1, 1, 1), q, 1),
        ((-1, -1, 1), q, -1),
        ((-1, 1, -1), q, 1),
        ((1, -1, -1), q, -1),
    }


def test_support_distribution_hand_case():
    lay = chunk_layout(3, 2, 1, {2})
    supp = dict(_support_distribution(lay))
    assert supp == {0b000: Fraction(1, 2), 0b101: Fraction(1, 2)}


def test_scheme_weights_and_support():
    for n, m, d in [(3, 2, 1), (5, 2, 2), (6, 4, 1), (7, 2, 3), (10, 4, 2)]:
        for S in itertools.islice(itertools.combinations(range(1, n + 1), d), 5):
            scheme = build_scheme(n, m, d, S)
            assert sum(w for _, w, _ in scheme.atoms) == 1
            assert all(pt.weight % m == 0 for pt, _, _ in scheme.atoms)
            w_bits = {p.bits for p in w_set(n, m)}
            assert all(pt.bits in w_bits for pt, _, _ in scheme.atoms)


def test_scheme_atom_count_is_product_of_states():
    # the chunk sign twist is recoverable from the point (the chunk-end
    # coordinate is +1 in every state), so no two atoms ever merge
    for n, m, d in [(5, 2, 2), (6, 4, 1), (10, 4, 2)]:
        states = 1 + math.comb(m - 1, m // 2)
        scheme = build_scheme(n, m, d, tuple(range(m, m * d + 1, m)))
        assert len(scheme.atoms) == (states**d) * (2**d)


def test_scheme_deterministic():
    a = build_scheme(7, 2, 3, {2, 4, 6})
    b = build_scheme(7, 2, 3, {2, 4, 6})
    assert a == b


def test_single_coordinate_balance():
    # under the product distribution, every non-end chunk coordinate has
    # expectation exactly zero
    for n, m, d in [(3, 2, 1), (6, 4, 1), (10, 4, 2)]:
        lay = chunk_layout(n, m, d, tuple(range(m, m * d + 1, m)))
        supp = _support_distribution(lay)
        assert sum(p for _, p in supp) == 1
        for chunk in lay.chunks:
            for label in chunk[:-1]:
                bit = 1 << (label - 1)
                exp = sum(
                    (-p if bits & bit else p) for bits, p in supp
                )
                assert exp == 0
            end_bit = 1 << (chunk[-1] - 1)
            assert all(not bits & end_bit for bits, _ in supp)


def test_monomial_expectations_identify_target():
    # E[x^T] over the distribution is 1 for T = S and 0 for any other T
    # meeting each chunk exactly once
    n, m, d = 6, 2, 2
    S = (2, 4)
    lay = chunk_layout(n, m, d, S)
    supp = _support_distribution(lay)
    for t1 in lay.chunks[0]:
        for t2 in lay.chunks[1]:
            T = mask_of([t1, t2])
            exp = sum(
                (-p if (bits & T).bit_count() & 1 else p) for bits, p in supp
            )
            assert exp == (1 if (t1, t2) == S else 0)


def test_recover_examples():
    scheme = build_scheme(3, 2, 1, {2})
    x2 = {mask_of([2]): (Fraction(1),)}
    x1 = {mask_of([1]): (Fraction(1),)}
    const = {0: (Fraction(5),)}
    from skewcube.fourier import MultilinearPoly

    for coeffs, want in [(x2, 1), (x1, 0), (const, 0)]:
        poly = MultilinearPoly(3, 1, coeffs)
        got = recover_coefficient(scheme, lambda p: poly.value_at(p.bits))
        assert got == (Fraction(want),)


def test_recover_from_value_table_and_callback_agree():
    poly = random_poly(5, 2, 2, seed=7)
    scheme = build_scheme(5, 2, 2, {1, 4})
    table = inverse_wht(poly)
    via_table = recover_coefficient(scheme, table)
    via_callback = recover_coefficient(scheme, lambda p: poly.value_at(p.bits))
    assert via_table == via_callback
    assert via_table == poly.coeffs.get(mask_of([1, 4]), (Fraction(0),) * 2)


def test_recover_exact_small_grid():
    # both transform directions in the loop: coefficients are read back
    # through wht(inverse_wht(poly)) rather than trusted from construction
    for m, d, n in [(2, 1, 3), (2, 1, 4), (2, 2, 5), (2, 2, 6), (4, 1, 6)]:
        subsets = list(itertools.combinations(range(1, n + 1), d))[:6]
        for S in subsets:
            scheme = build_scheme(n, m, d, S)
            for seed in range(3):
                poly = random_poly(n, d if seed else max(d - 1, 0), 1, seed)
                table = inverse_wht(poly)
                direct = wht(table).coeffs.get(mask_of(S), (Fraction(0),))
                assert recover_coefficient(scheme, table) == direct


def test_recover_missing_value():
    scheme = build_scheme(3, 2, 1, {2})
    with pytest.raises(MissingValue):
        recover_coefficient(scheme, lambda p: None)


def test_recover_table_dimension_mismatch():
    scheme = build_scheme(3, 2, 1, {2})
    table = inverse_wht(random_poly(4, 1, 1, seed=0))
    with pytest.raises(DimensionMismatch):
        recover_coefficient(scheme, table)


def test_scheme_depends_only_on_shape():
    # same inputs, same scheme; the function being recovered never enters
    assert build_scheme(5, 2, 2, (2, 4)) == build_scheme(5, 2, 2, [4, 2])


def test_vanishing_dimension_examples():
    assert vanishing_dimension(3, 2, 1) == 0
    assert vanishing_dimension(6, 2, 2) == 0
    # two points, three unknowns, two independent constraints
    assert vanishing_dimension(2, 2, 1) == 1


def test_vanishing_dimension_bad_modulus():
    with pytest.raises(BadModulus):
        vanishing_dimension(4, 3, 1)
    with pytest.raises(BadModulus):
        vanishing_dimension(4, 1, 1)


def test_vanishing_dimension_matches_bruteforce_nullity():
    from skewcube.linalg import exact_nullity

    for n, m, d in [(4, 2, 2), (5, 4, 1), (4, 4, 2), (3, 2, 2)]:
        cols = []
        for size in range(d + 1):
            cols.extend(mask_of(s) for s in itertools.combinations(range(1, n + 1), size))
        rows = [
            [1 - 2 * ((c & p.bits).bit_count() & 1) for c in cols]
            for p in w_set(n, m)
        ]
        assert vanishing_dimension(n, m, d) == exact_nullity(rows, len(cols))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2), st.integers(2, 3), st.data())
def test_recover_property_random(d, half_m, data):
    m = 2 * half_m
    n = data.draw(st.integers(d * m + m // 2, d * m + m // 2 + 2))
    S = tuple(sorted(data.draw(st.permutations(range(1, n + 1)))[:d]))
    seed = data.draw(st.integers(0, 50))
    poly = random_poly(n, d, 1, seed)
    scheme = build_scheme(n, m, d, S)
    got = recover_coefficient(scheme, lambda p: poly.value_at(p.bits))
    assert got == poly.coeffs.get(mask_of(S), (Fraction(0),))
