import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qzeta import (
    THETA,
    QContext,
    Triple,
    bar,
    classical_zeta,
    frakz,
    idx,
    is_admissible,
    mhs,
    mhs_many,
    mollified_mhs,
    mollified_mhs_many,
    q_zeta,
)

entries = st.builds(
    lambda m, s: idx(m) if s else bar(m),
    st.integers(min_value=1, max_value=3),
    st.booleans(),
)


def test_mhs_empty_string_and_zero_bound(ctx_half):
    assert mhs_many(ctx_half, (), 4) == [Fraction(1)] * 5
    assert mhs(ctx_half, (2, 1), 0) == 0
    assert mhs(ctx_half, (2,), 1, star=True) == mhs(ctx_half, (2,), 1)


def test_known_small_values(ctx_half):
    q = ctx_half.q
    # depth-three weak-descent sum at n = 1 collapses to its diagonal term
    assert mhs(ctx_half, (2, 2, 3), 1, star=True) == q**3
    assert mhs(ctx_half, (1,), 2) == q / ctx_half.q_int(1) + q**2 / ctx_half.q_int(2)
    assert mhs(ctx_half, (1,), 2) == Fraction(2, 3)
    # n = 1 star value of ({2}^a, c) is q^(a+1) for any c
    for a in range(0, 4):
        for c in (3, 4, 5):
            s = (2,) * a + (c,)
            assert mhs(ctx_half, s, 1, star=True) == q ** (a + 1)


def test_mollified_small_values(ctx_half):
    q = ctx_half.q
    # single negative slot at n = 1: ratio * q^t * (1 + q) / -[1]^mag
    assert mollified_mhs(ctx_half, Triple((bar(5),), (2,), (1,)), 1) == -Fraction(1, 4)
    for a in range(0, 4):
        for c in (3, 4, 5):
            tri = Triple((bar(2 * a + c),), (a + 1,), (1,))
            assert mollified_mhs(ctx_half, tri, 1) == -(q ** (a + 1))


@settings(max_examples=40, deadline=None)
@given(st.lists(entries, min_size=1, max_size=3), st.booleans())
def test_mhs_matches_bruteforce(ctx_half, s, star):
    expect = oracles.harmonic_all_n(ctx_half.q, [(e.magnitude, e.sign) for e in s], 8, star)
    assert mhs_many(ctx_half, tuple(s), 8, star=star) == expect


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.tuples(entries, st.integers(0, 3), st.one_of(st.just(THETA), st.integers(-2, 3))),
        min_size=1,
        max_size=3,
    )
)
def test_mollified_matches_bruteforce(ctx_half, slots):
    tri = Triple(
        tuple(e for e, _, _ in slots),
        tuple(t for _, t, _ in slots),
        tuple(r for _, _, r in slots),
    )
    expect = oracles.mollified_all_n(
        ctx_half.q,
        [((e.magnitude, e.sign), t, None if r is THETA else r) for e, t, r in slots],
        8,
    )
    assert mollified_mhs_many(ctx_half, tri, 8) == expect


def test_quasi_stuffle_spot(ctx_half, ctx_third):
    for ctx in (ctx_half, ctx_third):
        one_minus_q = 1 - ctx.q
        for a, b in ((1, 1), (2, 3), (4, 2)):
            for n in (5, 12):
                lhs = mhs(ctx, (a,), n) * mhs(ctx, (b,), n)
                rhs = (
                    mhs(ctx, (a, b), n)
                    + mhs(ctx, (b, a), n)
                    + mhs(ctx, (a + b,), n)
                    - one_minus_q * mhs(ctx, (a + b - 1,), n)
                )
                assert lhs == rhs
                star = mhs(ctx, (a, b), n, star=True)
                strict = (
                    mhs(ctx, (a, b), n)
                    + mhs(ctx, (a + b,), n)
                    - one_minus_q * mhs(ctx, (a + b - 1,), n)
                )
                assert star == strict


def test_q_zeta_converges_to_partial_sums(ctx_half):
    val = q_zeta(ctx_half, (2, 1), eps=Fraction(1, 10**12))
    assert val.tail_bound <= Fraction(1, 10**12)
    refined = q_zeta(ctx_half, (2, 1), eps=Fraction(1, 10**24))
    assert abs(val.value - refined.value) <= val.tail_bound
    # the reported value is the exact partial sum through the stated bound
    assert mhs(ctx_half, (2, 1), val.terms) == val.value


def test_q_zeta_empty_and_errors(ctx_half):
    assert q_zeta(ctx_half, ()).value == 1
    with pytest.raises(ValueError):
        q_zeta(ctx_half, (2,), eps=Fraction(0))


def test_frakz_certified_truncation(ctx_half):
    tri = Triple((idx(3),), (2,), (2,))
    val = frakz(ctx_half, tri, eps=Fraction(1, 10**15))
    refined = frakz(ctx_half, tri, eps=Fraction(1, 10**25))
    assert abs(val.value - refined.value) <= val.tail_bound
    assert val.tail_bound <= Fraction(1, 10**15)


def test_frakz_rejects_divergent_shifts(ctx_half):
    with pytest.raises(ValueError, match="divergent"):
        frakz(ctx_half, Triple((idx(1),), (0,), (0,)))


def test_mollified_stabilizes_toward_frakz(ctx_half):
    tri = Triple((idx(2), bar(1)), (1, 0), (2, -1))
    assert is_admissible(tri)
    limit = frakz(ctx_half, tri, eps=Fraction(1, 10**30)).value
    gaps = [abs(mollified_mhs(ctx_half, tri, n) - limit) for n in (10, 20, 40)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_classical_zeta_known_constants():
    z2 = classical_zeta((2,), K=100_000)
    assert abs(z2.value - math.pi**2 / 6) <= z2.tail_est + 1e-9
    z3 = classical_zeta((3,), K=100_000)
    assert abs(z3.value - 1.2020569031595942) <= z3.tail_est + 1e-12
    # alternating depth-one value of magnitude 4 is -(7/8) zeta(4)
    zbar4 = classical_zeta((bar(4),), K=100_000)
    assert abs(zbar4.value + (7 / 8) * math.pi**4 / 90) <= 1e-12
    # weak-descent (2,2) equals (zeta(2)^2 + zeta(4)) / 2
    star22 = classical_zeta((2, 2), K=100_000, star=True)
    expect = ((math.pi**2 / 6) ** 2 + math.pi**4 / 90) / 2
    assert abs(star22.value - expect) <= star22.tail_est + 1e-9


def test_classical_zeta_preconditions():
    with pytest.raises(ValueError):
        classical_zeta((1,))
    with pytest.raises(ValueError):
        classical_zeta((1, 2), star=True)
    # a signed leading 1 converges in the strict case
    assert classical_zeta((bar(1),), K=10_000).terms == 10_000
    assert classical_zeta((), K=5).value == 1.0


def test_classical_zeta_tail_shrinks():
    lo = classical_zeta((2, 1), K=10_000, star=True)
    hi = classical_zeta((2, 1), K=100_000, star=True)
    assert hi.tail_est < lo.tail_est
    assert abs(hi.value - 2 * 1.2020569031595942) < abs(lo.value - 2 * 1.2020569031595942)
