import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latchain import (
    ExactPoly,
    check_damped_interlacing,
    diamond_product,
    f_from_h,
    h_from_f,
    interlaces,
    is_real_rooted,
    is_tp2,
    isolate_real_roots,
    poly_gcd,
    roots_in_interval,
    squarefree_decomposition,
    sturm_real_root_count,
)
from helpers import poly_from_roots, roots_interlace

ONE_PLUS_T = ExactPoly((1, 1))


def test_string_round_trip():
    p = ExactPoly.from_string("1 4 5 2")
    assert p.to_string() == "1 4 5 2"
    assert ExactPoly.from_string("1/2 -3").coeffs == (Fraction(1, 2), -3)
    assert ExactPoly().to_string() == "0"


def test_arithmetic_basics():
    p = ExactPoly((1, 2))
    q = ExactPoly((0, 1, 1))
    assert (p * q).coeffs == (0, 1, 3, 2)
    assert (p + q).coeffs == (1, 3, 1)
    assert (p - p).is_zero
    assert p(Fraction(1, 2)) == 2
    quo, rem = divmod(q, p)
    assert quo * p + rem == q
    assert poly_gcd(ONE_PLUS_T**2 * ExactPoly((1, 2)), ONE_PLUS_T * ExactPoly((1, 3))) == ONE_PLUS_T


def test_sturm_count_examples():
    assert sturm_real_root_count(ONE_PLUS_T**2) == 1
    assert sturm_real_root_count(ExactPoly((1, 1, 1))) == 0
    assert sturm_real_root_count(ExactPoly((1, 4, 5, 2)), (-1, 0)) == 2


def test_real_rooted_examples():
    assert is_real_rooted(ONE_PLUS_T**2 * ExactPoly((1, 2)))
    assert not is_real_rooted(ExactPoly((1, 0, 1)))
    assert not is_real_rooted(ExactPoly((1, 2, 2)))
    with pytest.raises(ValueError):
        is_real_rooted(ExactPoly())


def test_roots_in_interval_examples():
    assert roots_in_interval(ExactPoly((1, 4, 5, 2)), -1, 0)
    assert not roots_in_interval(ExactPoly((1, -1)), -1, 0)
    assert roots_in_interval(ExactPoly.monomial(3), -1, 0)
    with pytest.raises(ValueError, match="real-rooted"):
        roots_in_interval(ExactPoly((1, 0, 1)), -1, 0)


def test_interlaces_examples():
    assert interlaces(ExactPoly((1, 2)), ONE_PLUS_T * ExactPoly((1, 3)))
    assert interlaces(ONE_PLUS_T, ONE_PLUS_T**2)
    assert not interlaces(ONE_PLUS_T * ExactPoly((1, 4)), ExactPoly((1, 2)) * ExactPoly((1, 3)))
    # zero polynomial interlaces and is interlaced by everything
    assert interlaces(ExactPoly(), ONE_PLUS_T)
    assert interlaces(ONE_PLUS_T, ExactPoly())
    # degree gap of two is a plain False
    assert not interlaces(ExactPoly((1,)), ONE_PLUS_T**2)
    with pytest.raises(ValueError):
        interlaces(ExactPoly((1, 0, 1)), ONE_PLUS_T)


def test_damped_interlacing_examples():
    assert check_damped_interlacing(ONE_PLUS_T**2, ONE_PLUS_T, 1)
    assert check_damped_interlacing(ONE_PLUS_T**2, ONE_PLUS_T, 0)
    assert check_damped_interlacing(ExactPoly((0, 1, 1)), ONE_PLUS_T, Fraction(1, 2))
    with pytest.raises(ValueError, match="degree"):
        check_damped_interlacing(ONE_PLUS_T, ONE_PLUS_T, 1)
    with pytest.raises(ValueError, match="nonnegative"):
        check_damped_interlacing(ONE_PLUS_T**2, ONE_PLUS_T, -1)


def test_tp2_examples():
    assert is_tp2([[1, 0], [0, 1]])
    assert not is_tp2([[1, 2], [2, 1]])
    # triangular multiplier matrix with lambda = (1, 2, 3)
    assert is_tp2([[1, 2, 3], [0, 2, 3], [0, 0, 3]])
    assert not is_tp2([[1, -1], [0, 1]])


def test_h_from_f_examples():
    assert h_from_f(ExactPoly((1, 2)), 1) == ONE_PLUS_T
    assert h_from_f(ExactPoly((1,)), 0) == ExactPoly((1,))
    assert h_from_f(ExactPoly((1, 4, 5, 2)), 3) == ONE_PLUS_T
    with pytest.raises(ValueError):
        h_from_f(ExactPoly((1, 1, 1)), 1)


def test_diamond_product_examples():
    t = ExactPoly((0, 1))
    assert diamond_product(t, t) == ExactPoly((0, 1, 2))
    assert diamond_product(ExactPoly((1,)), ExactPoly((1, 4, 5, 2))) == ExactPoly((1, 4, 5, 2))


def test_isolation_counts():
    p = ONE_PLUS_T**2 * ExactPoly((1, 2))
    iso = isolate_real_roots(p)
    assert iso.distinct_count == 2
    assert iso.count_with_multiplicity == 3
    assert sorted(iso.multiplicities) == [1, 2]
    # intervals are disjoint, increasing, and half-open
    for (a1, b1), (a2, b2) in zip(iso.intervals, iso.intervals[1:]):
        assert b1 <= a2


def test_real_rooted_fuzz_1000():
    """Products of rational linear factors: counts match the constructed multiset."""
    rng = random.Random(1729)
    for _ in range(1000):
        k = rng.randint(1, 5)
        roots = []
        for _ in range(k):
            r = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
            roots += [r] * rng.randint(1, 2)
        p = poly_from_roots(roots)
        assert is_real_rooted(p)
        assert sturm_real_root_count(p) == len(set(roots))
        iso = isolate_real_roots(p)
        assert iso.count_with_multiplicity == len(roots)


small_fraction = st.fractions(
    min_value=-10, max_value=10, max_denominator=4
)


@settings(max_examples=150, deadline=None)
@given(
    st.lists(small_fraction, min_size=0, max_size=5),
    st.lists(small_fraction, min_size=0, max_size=5),
)
def test_interlaces_matches_root_comparator(g_roots, f_roots):
    g, f = poly_from_roots(g_roots), poly_from_roots(f_roots)
    assert interlaces(g, f) == roots_interlace(g_roots, f_roots)


def _interleaved(h_offsets, f_offsets):
    """h roots at 10, 20, ...; f roots shifted into the surrounding gaps."""
    h_roots = [Fraction(10 * (j + 1)) for j in range(len(h_offsets))]
    f_roots = [Fraction(10 * j) + off for j, off in enumerate(f_offsets)]
    return h_roots, f_roots


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_common_interlacer_sum(data):
    """h interlacing f and g forces h to interlace f + g."""
    k = data.draw(st.integers(min_value=1, max_value=4))
    gap = st.fractions(min_value=0, max_value=10, max_denominator=3)
    h_roots = [Fraction(10 * (j + 1)) for j in range(k)]
    f_roots = [Fraction(10 * j) + data.draw(gap) for j in range(k + 1)]
    g_roots = [Fraction(10 * j) + data.draw(gap) for j in range(k + 1)]
    h = poly_from_roots(h_roots)
    f, g = poly_from_roots(f_roots), poly_from_roots(g_roots)
    assert interlaces(h, f) and interlaces(h, g)
    assert interlaces(h, f + g)


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_common_interlacee_sum(data):
    """f and g interlacing h forces f + g to interlace h."""
    k = data.draw(st.integers(min_value=2, max_value=5))
    h_roots = [Fraction(10 * (j + 1)) for j in range(k)]
    gap = st.fractions(min_value=0, max_value=10, max_denominator=3)
    f_roots = [Fraction(10 * (j + 1)) + data.draw(gap) for j in range(k - 1)]
    g_roots = [Fraction(10 * (j + 1)) + data.draw(gap) for j in range(k - 1)]
    h = poly_from_roots(h_roots)
    f, g = poly_from_roots(f_roots), poly_from_roots(g_roots)
    assert interlaces(f, h) and interlaces(g, h)
    assert interlaces(f + g, h)


def _random_tn_matrix(data, size: int):
    """Product of nonnegative diagonal and elementary bidiagonal factors.

    Such products are totally nonnegative, so in particular TP2; this
    gives dense coverage instead of filtering random matrices.
    """
    mat = [[1 if i == j else 0 for j in range(size)] for i in range(size)]

    def mul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
            for i in range(size)
        ]

    steps = data.draw(st.integers(min_value=1, max_value=5))
    for _ in range(steps):
        kind = data.draw(st.sampled_from(["diag", "lower", "upper"]))
        factor = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        if kind == "diag":
            for i in range(size):
                factor[i][i] = data.draw(st.integers(min_value=0, max_value=3))
        else:
            i = data.draw(st.integers(min_value=0, max_value=size - 2))
            c = data.draw(st.integers(min_value=0, max_value=3))
            if kind == "lower":
                factor[i + 1][i] = c
            else:
                factor[i][i + 1] = c
        mat = mul(mat, factor)
    return mat


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_tp2_matrices_preserve_interlacing_sequences(data):
    """Nonnegative TP2 matrices map interlacing sequences to interlacing sequences."""
    length = data.draw(st.integers(min_value=2, max_value=3))
    degree = data.draw(st.integers(min_value=1, max_value=3))
    gap = st.fractions(min_value=0, max_value=9, max_denominator=2)
    # cells construction: root j of member i lives in cell j, ascending in i
    offsets = [
        sorted(data.draw(st.lists(gap, min_size=length, max_size=length)))
        for _ in range(degree)
    ]
    seq = [
        poly_from_roots([Fraction(10 * (j + 1)) + offsets[j][i] for j in range(degree)])
        for i in range(length)
    ]
    for i in range(length):
        for j in range(i + 1, length):
            assert interlaces(seq[i], seq[j])
    rows = _random_tn_matrix(data, length)
    assert is_tp2(rows)
    image = []
    for row in rows:
        acc = ExactPoly()
        for c, p in zip(row, seq):
            acc = acc + c * p
        image.append(acc)
    for i in range(len(image)):
        for j in range(i + 1, len(image)):
            assert interlaces(image[i], image[j])


@settings(max_examples=100, deadline=None)
@given(st.lists(small_fraction, min_size=0, max_size=5), st.integers(min_value=0, max_value=8))
def test_h_f_round_trip(coeffs, extra):
    f = ExactPoly(coeffs)
    n = (f.degree if not f.is_zero else 0) + extra
    assert f_from_h(h_from_f(f, n), n) == f


@settings(max_examples=100, deadline=None)
@given(st.lists(small_fraction, min_size=1, max_size=4))
def test_squarefree_decomposition_reassembles(roots):
    p = poly_from_roots(roots)
    acc = ExactPoly((1,))
    for q, mult in squarefree_decomposition(p):
        acc = acc * q**mult
    assert acc == p.monic()
