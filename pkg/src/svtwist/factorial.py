"""Shifted rising and falling factorials of ``h = N_0`` and the commutation
rules that move generators past powers of ``h`` and ``e = Y_p``.

Every ``check_*`` function computes both sides of an identity independently
and returns a ``Check``.
"""

from fractions import Fraction
from math import comb, factorial

from .lie import Family, N, _gen, lie_bracket
from .poly import UPoly
from .report import compare

H = N(0)


def h_poly(order):
    return UPoly.gen(H, order)


def rising(a, n, order):
    """``h^{(n)}_a = (h+a)(h+a+1)...(h+a+n-1)`` expanded in powers of ``h``."""
    a = Fraction(a)
    h = h_poly(order)
    out = UPoly.one(order)
    for k in range(n):
        out = out * (h + (a + k))
    return out


def falling(a, n, order):
    """``h^{[n]}_a = (h+a)(h+a-1)...(h+a-n+1)``."""
    a = Fraction(a)
    h = h_poly(order)
    out = UPoly.one(order)
    for k in range(n):
        out = out * (h + (a - k))
    return out


def gen_binomial(a, r):
    """``a(a-1)...(a-r+1)/r!`` for rational ``a``."""
    a = Fraction(a)
    num = Fraction(1)
    for k in range(r):
        num *= a - k
    return num / factorial(r)


def e_power(ctx, r, order=None):
    return UPoly.word((ctx.e,) * r, ctx.order if order is None else order)


def check_factorial_products(a, s, t, order=0):
    """``x^{(s+t)}_a = x^{(s)}_a x^{(t)}_{a+s}``, the falling analogue, and
    ``x^{[s]}_a = x^{(s)}_{a-s+1}``."""
    a = Fraction(a)
    return [
        compare("rising product a=%s s=%d t=%d" % (a, s, t),
                rising(a, s, order) * rising(a + s, t, order), rising(a, s + t, order)),
        compare("falling product a=%s s=%d t=%d" % (a, s, t),
                falling(a, s, order) * falling(a - s, t, order), falling(a, s + t, order)),
        compare("falling as rising a=%s s=%d" % (a, s),
                falling(a, s, order), rising(a - s + 1, s, order)),
    ]


def check_binomial_identities(a, b, r, order=0):
    """The two alternating sums over ``s + t = r`` collapse to scalars."""
    a, b = Fraction(a), Fraction(b)
    first = UPoly(order)
    second = UPoly(order)
    for s in range(r + 1):
        t = r - s
        w = Fraction((-1) ** t, factorial(s) * factorial(t))
        first = first + (falling(a, s, order) * rising(b, t, order)).scale(w)
        second = second + (falling(a, s, order) * falling(b - s, t, order)).scale(w)
    tag = "a=%s b=%s r=%d" % (a, b, r)
    return [
        compare("falling-rising sum " + tag, first,
                UPoly.scalar(gen_binomial(a - b, r), order)),
        compare("falling-falling sum " + tag, second,
                UPoly.scalar(gen_binomial(a - b + r - 1, r), order)),
    ]


def ad_power(y, x, k):
    """``(ad y)^k (x)`` for generators, as ``{Gen: coeff}``."""
    combo = {x: Fraction(1)}
    for _ in range(k):
        nxt = {}
        for g, c in combo.items():
            res = lie_bracket(y, g)
            if res is not None:
                nxt[res[1]] = nxt.get(res[1], 0) + c * res[0]
        combo = {g: c for g, c in nxt.items() if c}
    return combo


def ad_power_expand(x, y, m, order=0):
    """``sum_k (-1)^k C(m,k) y^{m-k} (ad y)^k (x)``, normal-ordered."""
    out = UPoly(order)
    for k in range(m + 1):
        adk = UPoly.from_combo(ad_power(y, x, k), order)
        if adk.is_zero():
            continue
        out = out + (UPoly.word((y,) * (m - k), order) * adk).scale((-1) ** k * comb(m, k))
    return out


def commute_past_e_power(g, r, ctx, order=None):
    """``g e^r`` written with the powers of ``e`` on the left, from the
    closed forms for each family."""
    order = ctx.order if order is None else order
    p2 = ctx.p2
    out = e_power(ctx, r, order) * UPoly.gen(g, order)
    if g.family == Family.M:
        return out

    def e_times(k, gen):
        if k < 0:
            return UPoly(order)
        return e_power(ctx, k, order) * UPoly.gen(gen, order)

    if g.family == Family.Y:
        # Y_q e^r = e^r Y_q + r(p-q) e^{r-1} M_{p+q}
        p_minus_q = Fraction(p2 - g.index2, 2)
        return out + e_times(r - 1, _gen(Family.M, p2 + g.index2)).scale(r * p_minus_q)

    n = Fraction(g.index2, 2)
    coeff = Fraction(p2, 2) - n / 2 if g.family == Family.L else Fraction(1)
    y_part = e_times(r - 1, _gen(Family.Y, g.index2 + p2)).scale(r)
    m_part = e_times(r - 2, _gen(Family.M, g.index2 + 2 * p2)).scale(n * r * (r - 1) / 2)
    return out + (y_part - m_part).scale(coeff)


def h_shift(g):
    """How far ``g`` shifts ``h``: ``g h = (h - shift) g``."""
    return {Family.L: 0, Family.N: 0, Family.M: 2, Family.Y: 1}[g.family]


def commute_h_shift(g, kind, a, i, order, e_pow=None):
    """Return ``(lhs, rhs)`` for ``g h^{(i)}_a = h^{(i)}_{a'} g``.

    ``g`` is a generator, or pass ``e_pow=(ctx, n)`` to use ``e^n`` instead,
    which shifts by ``n``.  ``kind`` is ``"rising"`` or ``"falling"``.
    """
    fn = {"rising": rising, "falling": falling}[kind]
    a = Fraction(a)
    if e_pow is not None:
        ctx, n = e_pow
        left = e_power(ctx, n, order)
        shift = n
    else:
        left = UPoly.gen(g, order)
        shift = h_shift(g)
    lhs = left * fn(a, i, order)
    rhs = fn(a - shift, i, order) * left
    return lhs, rhs
