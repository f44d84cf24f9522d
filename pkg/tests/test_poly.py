import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from svtwist.lie import L, M, N, Y, generators
from svtwist.poly import (ONE, TensorPoly, UPoly, delta0, delta0_mono, eps, factors, is_pbw,
                          map_slot, eps_mono, normal_order_word, rewrite_naive, s0, tensor)

SMALL = generators(4)
words = st.lists(st.sampled_from(SMALL), max_size=5).map(tuple)


def up(word, order=3, coeff=1, deg=0):
    return UPoly.word(word, order, coeff, deg)


def test_normal_order_examples():
    # one rewriting step: [L_1, M_2] = 2 M_3
    assert normal_order_word((L(1), M(2))) == {(M(2), L(1)): 1, (M(3),): 2}
    assert normal_order_word((M(0), Y(1), N(0))) == {(M(0), Y(1), N(0)): 1}
    # [Y_{3/2}, Y_{1/2}] = (1/2 - 3/2) M_2
    assert normal_order_word((Y(3), Y(1))) == {(Y(1), Y(3)): 1, (M(2),): -1}


@settings(max_examples=200, deadline=None)
@given(words)
def test_rewriting_strategies_agree(word):
    memo = normal_order_word(word)
    assert memo == rewrite_naive(word)
    assert memo == rewrite_naive(word, rightmost=True)
    assert all(is_pbw(m) for m in memo)


def test_u_mul_examples():
    assert up((Y(3),)) * up((Y(1),)) == up((Y(1), Y(3))) - up((M(2),))
    x = UPoly.one(3) + up((N(0),), deg=1)
    assert x * UPoly.one(3) == x
    e = up((Y(1),), order=1)
    assert (UPoly.one(1) + e.shift(1)) * (UPoly.one(1) - e.shift(1)) == UPoly.one(1)


def test_truncation_and_order_mismatch():
    t = UPoly.one(2).shift(1)
    assert (t * t * t).is_zero()
    with pytest.raises(ValueError):
        UPoly.one(2) * UPoly.one(3)
    with pytest.raises(TypeError):
        UPoly.one(2) + TensorPoly.one(2, 2)


def test_canonical_form_drops_zeros():
    x = up((N(0),)) - up((N(0),))
    assert x.terms == {} and x == UPoly(3)
    assert UPoly(3, {(5, ONE): 1}).is_zero()


def test_factors_view():
    assert factors((M(0), N(0), N(0), L(1))) == ((M(0), 1), (N(0), 2), (L(1), 1))
    assert factors(ONE) == ()


def test_tensor_mul_examples():
    h, e = up((N(0),)), up((Y(1),))
    one = UPoly.one(3)
    assert tensor(h, e) * tensor(one, e) == tensor(h, up((Y(1), Y(1))))
    assert tensor(one, h) * tensor(one, e) == tensor(one, up((Y(1), N(0))) + e)
    X = tensor(h, e) + tensor(e, h).shift(2)
    assert TensorPoly.one(2, 3) * X == X == X * TensorPoly.one(2, 3)


def test_tensor_arity_mismatch():
    with pytest.raises(ValueError):
        TensorPoly.one(2, 3) * TensorPoly.one(3, 3)
    with pytest.raises(ValueError):
        TensorPoly(4, 3)


def test_delta0_examples():
    one = UPoly.one(3)
    Ln = up((L(2),))
    assert delta0(Ln) == tensor(Ln, one) + tensor(one, Ln)
    h = up((N(0),))
    assert delta0(h * h) == tensor(h * h, one) + tensor(h, h).scale(2) + tensor(one, h * h)


def test_s0_and_eps_examples():
    # S0(he) = (-e)(-h) = e h, already PBW sorted
    he = up((N(0), Y(1)))
    assert s0(he) == UPoly.mono((Y(1), N(0)), 3)
    # S0(eh) = h e = e h + e
    assert s0(UPoly.mono((Y(1), N(0)), 3)) == up((Y(1), N(0))) + up((Y(1),))
    assert eps(up((Y(1), N(0))) + UPoly.scalar(3, 3)) == UPoly.scalar(3, 3)
    assert eps(UPoly.one(3)) == UPoly.one(3)


def _random_upoly(rng, order=3):
    out = UPoly(order)
    for _ in range(rng.randint(1, 3)):
        word = tuple(rng.choice(SMALL) for _ in range(rng.randint(0, 2)))
        out = out + up(word, order, Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                       rng.randint(0, order))
    return out


def test_associativity_random():
    rng = random.Random(7)
    for _ in range(100):
        x, y, z = (_random_upoly(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_undeformed_hopf_compatibility():
    rng = random.Random(11)
    for _ in range(40):
        x, y = _random_upoly(rng), _random_upoly(rng)
        assert delta0(x * y) == delta0(x) * delta0(y)
        assert s0(x * y) == s0(y) * s0(x)
        # eps is a counit for delta0
        assert map_slot(delta0(x), 0, lambda m: eps_mono(m, 3), width=0) == x
        assert map_slot(delta0(x), 1, lambda m: eps_mono(m, 3), width=0) == x


def test_delta0_mono_coefficients():
    # N_0^3 splits with binomial weights
    D = delta0_mono((N(0),) * 3, 0)
    assert D.terms == {(0, ((N(0),) * k, (N(0),) * (3 - k))): c
                       for k, c in enumerate((1, 3, 3, 1))}
