from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from svtwist.factorial import (ad_power_expand, check_binomial_identities,
                               check_factorial_products, commute_h_shift, commute_past_e_power,
                               falling, gen_binomial, rising)
from svtwist.lie import L, M, N, Y, TwistContext, generators
from svtwist.poly import UPoly, rewrite_naive

H = UPoly.gen(N(0), 0)
shifts = st.sampled_from([0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-3, 2)])


def brute(word, order=0):
    """Normal form through the unmemoized rewriting path."""
    return UPoly(order, {(0, m): c for m, c in rewrite_naive(word).items()})


def test_factorial_examples():
    assert rising(0, 2, 0) == H * H + H
    assert falling(0, 2, 0) == H * H - H
    assert rising(5, 0, 0) == UPoly.one(0)
    assert rising(1, 2, 0) * rising(3, 1, 0) == rising(1, 3, 0)
    assert falling(3, 2, 0) == rising(2, 2, 0)


@settings(max_examples=60, deadline=None)
@given(shifts, st.integers(0, 4), st.integers(0, 4))
def test_factorial_product_laws(a, s, t):
    assert all(c.ok for c in check_factorial_products(a, s, t))


def test_gen_binomial():
    assert gen_binomial(Fraction(7, 3), 0) == 1
    # (1/2)(-1/2)/2
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    for m in range(7):
        assert gen_binomial(-1, m) == (-1) ** m
    assert gen_binomial(4, 6) == 0


@pytest.mark.parametrize("a, b, r", [(0, 0, 0), (2, 1, 2), (Fraction(1, 2), 0, 3), (-2, 1, 5)])
def test_binomial_identities(a, b, r):
    assert all(c.ok for c in check_binomial_identities(a, b, r))


def test_binomial_identity_values():
    # C(1,2) = 0 and C(1/2,3) = (1/2)(-1/2)(-3/2)/6 = 1/16
    assert gen_binomial(2 - 1, 2) == 0
    assert gen_binomial(Fraction(1, 2), 3) == Fraction(1, 16)


def test_ad_power_expand_examples():
    assert ad_power_expand(L(1), Y(1), 0) == UPoly.gen(L(1), 0)
    e = Y(3)
    assert ad_power_expand(N(0), e, 1) == UPoly.mono((e, N(0)), 0) + UPoly.gen(e, 0)
    assert ad_power_expand(L(1), Y(1), 2) == brute((L(1), Y(1), Y(1)))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(generators(3)), st.sampled_from(generators(3)), st.integers(0, 4))
def test_ad_power_matches_normal_ordering(x, y, m):
    assert ad_power_expand(x, y, m) == brute((x,) + (y,) * m)


def test_commute_past_e_power_examples():
    ctx = TwistContext(1, 0)
    e = ctx.e
    assert commute_past_e_power(M(3), 4, ctx) == UPoly.word((e,) * 4 + (M(3),), 0)
    q = Y(-3)
    # Y_q e = e Y_q + (p - q) M_{p+q} with p - q = 2
    assert commute_past_e_power(q, 1, ctx) == \
        UPoly.word((e, q), 0) + UPoly.gen(M(-1), 0).scale(2)
    expected = (UPoly.word((e, e, L(2)), 0)
                + (UPoly.word((e, Y(5)), 0).scale(2) - UPoly.gen(M(3), 0).scale(2))
                .scale(Fraction(1, 2) - 1))
    assert commute_past_e_power(L(2), 2, ctx) == expected
    assert expected == brute((L(2), e, e))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(generators(6)), st.integers(0, 5), st.sampled_from([1, -1, 3]))
def test_commute_past_e_power_matches_brute_force(g, r, p2):
    ctx = TwistContext(p2, 0)
    assert commute_past_e_power(g, r, ctx) == brute((g,) + (ctx.e,) * r)


def test_commute_h_shift_examples():
    lhs, rhs = commute_h_shift(M(1), "rising", 0, 2, 0)
    assert lhs == rhs == rising(-2, 2, 0) * UPoly.gen(M(1), 0)
    lhs, rhs = commute_h_shift(L(3), "falling", 0, 2, 0)
    assert lhs == rhs == falling(0, 2, 0) * UPoly.gen(L(3), 0)
    ctx = TwistContext(1, 0)
    lhs, rhs = commute_h_shift(None, "rising", 0, 1, 0, e_pow=(ctx, 2))
    e = ctx.e
    # e^2 h = (h - 2) e^2
    assert lhs == rhs == brute((N(0), e, e)) - brute((e, e)).scale(2)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(generators(6)), st.sampled_from(["rising", "falling"]), shifts,
       st.integers(0, 4))
def test_commute_h_shift_property(g, kind, a, i):
    lhs, rhs = commute_h_shift(g, kind, a, i, 0)
    assert lhs == rhs
    fn = rising if kind == "rising" else falling
    # independent left-hand side via brute-force rewriting of each h-power
    poly = fn(a, i, 0)
    expected = UPoly(0)
    for (_, m), c in poly.terms.items():
        expected = expected + brute((g,) + m).scale(c)
    assert lhs == expected
