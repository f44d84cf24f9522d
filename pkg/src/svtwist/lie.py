"""Generators and structure constants of the extended Schrödinger-Virasoro algebra.

Indices are stored doubled (``index2``) so that the half-integer ``Y`` indices
are plain integers.  ``Y_{1/2}`` has ``index2 == 1`` and ``L_3`` has
``index2 == 6``.
"""

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from itertools import product
from typing import NamedTuple, Optional

INDEX_MAX = 2**63 - 1


class Family(IntEnum):
    # the integer value is the PBW rank: M < Y < N < L
    M = 0
    Y = 1
    N = 2
    L = 3


def checked_index(value):
    if not -INDEX_MAX - 1 <= value <= INDEX_MAX:
        raise OverflowError("generator index %d does not fit in 64 bits" % value)
    return value


class Gen(NamedTuple):
    """One basis element of the Lie algebra.

    Tuples compare lexicographically, so ``(family, index2)`` is exactly the
    PBW total order used throughout the package.
    """

    family: Family
    index2: int

    @classmethod
    def make(cls, family, index2):
        family = Family[family] if isinstance(family, str) else Family(family)
        checked_index(index2)
        if (family == Family.Y) != (index2 % 2 == 1):
            raise ValueError(
                "parity violation: %s needs an %s doubled index, got %d"
                % (family.name, "odd" if family == Family.Y else "even", index2))
        return cls(family, index2)

    @property
    def index(self):
        return Fraction(self.index2, 2)

    def __repr__(self):
        if self.index2 % 2:
            return "%s_{%d/2}" % (self.family.name, self.index2)
        n = self.index2 // 2
        if 0 <= n <= 9:
            return "%s_%d" % (self.family.name, n)
        return "%s_{%d}" % (self.family.name, n)


def L(n):
    return Gen.make(Family.L, 2 * n)


def M(n):
    return Gen.make(Family.M, 2 * n)


def N(n):
    return Gen.make(Family.N, 2 * n)


def Y(k2):
    """``Y(k2)`` is ``Y_{k2/2}``; ``k2`` must be odd."""
    return Gen.make(Family.Y, k2)


def _gen(family, index2):
    return Gen(family, checked_index(index2))


def lie_bracket(a: Gen, b: Gen) -> Optional[tuple]:
    """Return ``[a, b]`` as ``(coefficient, generator)``, or ``None`` for zero."""
    if a == b:
        return None
    if a > b:
        res = lie_bracket(b, a)
        return None if res is None else (-res[0], res[1])

    fa, fb = a.family, b.family
    s = a.index2 + b.index2
    m2, n2 = a.index2, b.index2
    # from here on a precedes b in the PBW order
    if fa == Family.M:
        if fb in (Family.M, Family.Y):
            return None
        if fb == Family.N:
            # [N_m, M_n] = 2 M_{m+n}
            return (Fraction(-2), _gen(Family.M, s))
        # [L_m, M_n] = n M_{m+n}
        return (Fraction(-m2, 2), _gen(Family.M, s))
    if fa == Family.Y:
        if fb == Family.Y:
            # [Y_p, Y_q] = (q - p) M_{p+q}
            return (Fraction(n2 - m2, 2), _gen(Family.M, s))
        if fb == Family.N:
            # [N_m, Y_p] = Y_{m+p}
            return (Fraction(-1), _gen(Family.Y, s))
        # [L_n, Y_p] = (p - n/2) Y_{p+n}
        return (-(Fraction(m2, 2) - Fraction(n2, 4)), _gen(Family.Y, s))
    if fa == Family.N:
        if fb == Family.N:
            return None
        # [L_m, N_n] = n N_{m+n}
        return (-Fraction(m2, 2), _gen(Family.N, s))
    # [L_m, L_n] = (n - m) L_{m+n}
    return (Fraction(n2 - m2, 2), _gen(Family.L, s))


def bracket_combo(x: dict, y: dict) -> dict:
    """Bilinear bracket of two linear combinations ``{Gen: coeff}``."""
    out = {}
    for (a, ca), (b, cb) in product(x.items(), y.items()):
        res = lie_bracket(a, b)
        if res is None:
            continue
        c, g = res
        out[g] = out.get(g, 0) + ca * cb * c
    return {g: c for g, c in out.items() if c}


def generators(max_index2, families="MYNL"):
    """All generators with ``|index2| <= max_index2``, in PBW order."""
    out = []
    for fam in sorted(Family[f] for f in families):
        for k in range(-max_index2, max_index2 + 1):
            if (fam == Family.Y) == (k % 2 != 0):
                out.append(Gen(fam, k))
    return out


def jacobi_check(max_index2, families="MYNL"):
    """Check the Jacobi identity on every ordered triple of generators.

    Returns ``(ok, first_bad_triple, triples_checked)``.
    """
    gens = generators(max_index2, families)
    count = 0
    for x, y, z in product(gens, repeat=3):
        count += 1
        X, Y_, Z = {x: 1}, {y: 1}, {z: 1}
        total = {}
        for a, b, c in ((X, Y_, Z), (Y_, Z, X), (Z, X, Y_)):
            for g, v in bracket_combo(a, bracket_combo(b, c)).items():
                total[g] = total.get(g, 0) + v
        if any(total.values()):
            return False, (x, y, z), count
    return True, None, count


@dataclass(frozen=True)
class TwistContext:
    """Global configuration: ``p = p2/2`` selects ``e = Y_p``; ``order`` is
    the truncation order in ``t``.  ``h`` is always ``N_0``."""

    p2: int = 1
    order: int = 3

    def __post_init__(self):
        if not isinstance(self.p2, int) or self.p2 % 2 != 1:
            raise ValueError("p must be a half-integer (odd p2), got p2=%r" % (self.p2,))
        checked_index(self.p2)
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError("order must be >= 0, got %r" % (self.order,))

    @property
    def p(self):
        return Fraction(self.p2, 2)

    @property
    def h(self):
        return Gen(Family.N, 0)

    @property
    def e(self):
        return Gen(Family.Y, self.p2)

    def with_order(self, order):
        return TwistContext(self.p2, order)
