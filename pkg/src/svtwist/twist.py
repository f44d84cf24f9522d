"""The twist pair ``F_a`` / ``calF_a``, the elements ``u_a`` / ``v_a`` and the
checks that they behave as claimed at a finite truncation order.

``calF = calF_0`` is the twist; ``F = F_0`` is its inverse.  ``w = v_0`` and
``w^{-1} = u_0`` conjugate the undeformed antipode.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .factorial import e_power, falling, gen_binomial, h_shift, rising
from .lie import Family, _gen
from .poly import (TensorPoly, UPoly, delta0_mono, embed, eps_mono, map_slot,
                   multiply_slots, s0_mono, tensor)
from .report import compare


def _cached(fn):
    # ctx is a frozen dataclass and ``a`` a Fraction, both hashable
    cached = lru_cache(maxsize=None)(fn)

    def wrapper(a, ctx):
        return cached(Fraction(a), ctx)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.cache_clear = cached.cache_clear
    return wrapper


@_cached
def build_curlyF(a, ctx):
    """``calF_a = sum_r (-1)^r/r! h^{[r]}_a (x) e^r t^r``."""
    N = ctx.order
    out = TensorPoly(2, N)
    for r in range(N + 1):
        term = tensor(falling(a, r, N), e_power(ctx, r).shift(r))
        out = out + term.scale(Fraction((-1) ** r, factorial(r)))
    return out


@_cached
def build_F(a, ctx):
    """``F_a = sum_r 1/r! h^{(r)}_a (x) e^r t^r``."""
    N = ctx.order
    out = TensorPoly(2, N)
    for r in range(N + 1):
        term = tensor(rising(a, r, N), e_power(ctx, r).shift(r))
        out = out + term.scale(Fraction(1, factorial(r)))
    return out


@_cached
def build_u(a, ctx):
    """``u_a = sum_r (-1)^r/r! h^{[r]}_{-a} e^r t^r``."""
    N = ctx.order
    out = UPoly(N)
    for r in range(N + 1):
        out = out + (falling(-a, r, N) * e_power(ctx, r)).shift(r).scale(
            Fraction((-1) ** r, factorial(r)))
    return out


@_cached
def build_v(a, ctx):
    """``v_a = sum_r 1/r! h^{[r]}_a e^r t^r``."""
    N = ctx.order
    out = UPoly(N)
    for r in range(N + 1):
        out = out + (falling(a, r, N) * e_power(ctx, r)).shift(r).scale(
            Fraction(1, factorial(r)))
    return out


def u_from_twist(a, ctx):
    """``m (S_0 (x) Id)(F_a)``."""
    return multiply_slots(_s0_slot(build_F(a, ctx), 0))


def v_from_twist(a, ctx):
    """``m (Id (x) S_0)(calF_a)``."""
    return multiply_slots(_s0_slot(build_curlyF(a, ctx), 1))


def _s0_slot(x, slot):
    # S_0 on one slot of a 2-tensor, keeping the tensor shape
    out = {}
    for (d, k), c in x.terms.items():
        for (dd, m), cc in s0_mono(k[slot], x.order).terms.items():
            key = k[:slot] + (m,) + k[slot + 1:]
            out[d + dd, key] = out.get((d + dd, key), 0) + c * cc
    return TensorPoly(2, x.order, out)


@_cached
def series_power(a, ctx):
    """``(1 - e t)^a = sum_m C(a, m) (-1)^m e^m t^m``."""
    N = ctx.order
    out = UPoly(N)
    for m in range(N + 1):
        c = gen_binomial(a, m) * (-1) ** m
        if c:
            out = out + e_power(ctx, m).shift(m).scale(c)
    return out


def one_tensor(x):
    """``1 (x) x`` for a ``UPoly``."""
    return tensor(UPoly.one(x.order), x)


def verify_inverses(a, b, ctx):
    a, b = Fraction(a), Fraction(b)
    N = ctx.order
    tag = "a=%s b=%s p=%s N=%d" % (a, b, ctx.p, N)
    checks = [
        compare("calF_a F_b = 1(x)(1-et)^(a-b) " + tag,
                build_curlyF(a, ctx) * build_F(b, ctx), one_tensor(series_power(a - b, ctx))),
        compare("v_a u_b = (1-et)^-(a+b) " + tag,
                build_v(a, ctx) * build_u(b, ctx), series_power(-(a + b), ctx)),
    ]
    if a == b:
        one2 = TensorPoly.one(2, N)
        checks += [
            compare("F_a calF_a = 1(x)1 " + tag, build_F(a, ctx) * build_curlyF(a, ctx), one2),
        ]
    if a == -b:
        checks += [
            compare("u_b v_a = 1 " + tag, build_u(b, ctx) * build_v(a, ctx), UPoly.one(N)),
        ]
    return checks


def check_u_v_characterisation(a, ctx):
    tag = "a=%s p=%s N=%d" % (Fraction(a), ctx.p, ctx.order)
    return [
        compare("u_a = m(S0(x)Id)(F_a) " + tag, build_u(a, ctx), u_from_twist(a, ctx)),
        compare("v_a = m(Id(x)S0)(calF_a) " + tag, build_v(a, ctx), v_from_twist(a, ctx)),
    ]


def delta0_falling(r, a, order):
    """``Delta_0(h^{[r]}) = sum_i C(r,i) h^{[i]}_{-a} (x) h^{[r-i]}_a``."""
    a = Fraction(a)
    lhs = map_slot(falling(0, r, order), 0, lambda m: delta0_mono(m, order), width=2)
    rhs = TensorPoly(2, order)
    for i in range(r + 1):
        rhs = rhs + tensor(falling(-a, i, order), falling(a, r - i, order)).scale(comb(r, i))
    return compare("Delta0(h^[%d]) split at a=%s" % (r, a), lhs, rhs)


def twist_sides(ctx, F=None):
    """Both sides of the cocycle condition, as 3-fold tensors.

    ``F`` defaults to the twist ``calF``; any 2-tensor can be passed.
    """
    N = ctx.order
    F = build_curlyF(0, ctx) if F is None else F
    lhs = embed(F, (0, 1), 3) * map_slot(F, 0, lambda m: delta0_mono(m, N), width=2)
    rhs = embed(F, (1, 2), 3) * map_slot(F, 1, lambda m: delta0_mono(m, N), width=2)
    return lhs, rhs


def verify_twist_equation(ctx):
    N = ctx.order
    F = build_curlyF(0, ctx)
    lhs, rhs = twist_sides(ctx)
    tag = "p=%s N=%d" % (ctx.p, N)
    counit = lambda m: eps_mono(m, N)
    return [
        compare("cocycle (calF(x)1)(D0(x)Id)calF = (1(x)calF)(Id(x)D0)calF " + tag, lhs, rhs),
        compare("(eps(x)Id)calF = 1 " + tag, map_slot(F, 0, counit, width=0), UPoly.one(N)),
        compare("(Id(x)eps)calF = 1 " + tag, map_slot(F, 1, counit, width=0), UPoly.one(N)),
    ]


def _gen_left(g, N):
    return tensor(UPoly.gen(g, N), UPoly.one(N))


def _gen_right(g, N):
    return tensor(UPoly.one(N), UPoly.gen(g, N))


def check_slot1_commutation(g, a, ctx):
    """``(g (x) 1) F_a = F_{a - shift} (g (x) 1)``."""
    a = Fraction(a)
    G = _gen_left(g, ctx.order)
    return compare("(%r(x)1)F_a a=%s p=%s" % (g, a, ctx.p),
                   G * build_F(a, ctx), build_F(a - h_shift(g), ctx) * G)


def _slot2_rhs(g, a, ctx):
    N, p2 = ctx.order, ctx.p2
    G = _gen_right(g, N)
    rhs = build_F(a, ctx) * G
    if g.family == Family.M:
        return rhs
    if g.family == Family.Y:
        coeff = Fraction(p2 - g.index2, 2)
        mq = UPoly.gen(_gen(Family.M, p2 + g.index2), N)
        corr = build_F(a + 1, ctx) * tensor(rising(a, 1, N), mq).shift(1)
        return rhs + corr.scale(coeff)
    n = Fraction(g.index2, 2)
    coeff = ctx.p - n / 2 if g.family == Family.L else Fraction(1)
    yq = UPoly.gen(_gen(Family.Y, g.index2 + p2), N)
    m2 = UPoly.gen(_gen(Family.M, g.index2 + 2 * p2), N)
    corr = (build_F(a + 1, ctx) * tensor(rising(a, 1, N), yq).shift(1)
            - (build_F(a + 2, ctx) * tensor(rising(a, 2, N), m2).shift(2)).scale(n / 2))
    return rhs + corr.scale(coeff)


def check_slot2_commutation(g, a, ctx):
    """``(1 (x) g) F_a`` against its closed form."""
    a = Fraction(a)
    lhs = _gen_right(g, ctx.order) * build_F(a, ctx)
    return compare("(1(x)%r)F_a a=%s p=%s" % (g, a, ctx.p), lhs, _slot2_rhs(g, a, ctx))


def _u_rhs(g, a, ctx):
    N, p2 = ctx.order, ctx.p2
    G = UPoly.gen(g, N)
    if g.family == Family.M:
        return build_u(a + 2, ctx) * G
    if g.family == Family.Y:
        u1 = build_u(a + 1, ctx)
        mq = UPoly.gen(_gen(Family.M, p2 + g.index2), N)
        coeff = Fraction(g.index2 - p2, 2)
        return u1 * G + (u1 * rising(-a - 1, 1, N) * mq).shift(1).scale(coeff)
    n = Fraction(g.index2, 2)
    coeff = ctx.p - n / 2 if g.family == Family.L else Fraction(1)
    ua = build_u(a, ctx)
    yq = UPoly.gen(_gen(Family.Y, g.index2 + p2), N)
    m2 = UPoly.gen(_gen(Family.M, g.index2 + 2 * p2), N)
    inner = yq + (rising(-a - 1, 1, N) * m2).shift(1).scale(n / 2)
    return ua * G - (ua * rising(-a, 1, N) * inner).shift(1).scale(coeff)


def check_u_commutation(g, a, ctx):
    """``g u_a`` against its closed form."""
    a = Fraction(a)
    lhs = UPoly.gen(g, ctx.order) * build_u(a, ctx)
    return compare("%r u_a a=%s p=%s" % (g, a, ctx.p), lhs, _u_rhs(g, a, ctx))
