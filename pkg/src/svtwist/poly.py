"""Truncated series over U(L): PBW monomials, ``UPoly`` and ``TensorPoly``.

A PBW monomial is stored flat, as a nondecreasing tuple of ``Gen`` values, so
``N_0^2 L_1`` is ``(N_0, N_0, L_1)``.  ``factors`` gives the grouped
``(generator, exponent)`` view.  Every coefficient is a ``Fraction``.
"""

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from math import comb

from .lie import lie_bracket

ONE = ()


def factors(mono):
    return tuple((g, len(list(grp))) for g, grp in groupby(mono))


def is_pbw(mono):
    return all(a <= b for a, b in zip(mono, mono[1:]))


# -- normal ordering -------------------------------------------------------

@lru_cache(maxsize=None)
def times_gen(mono, g):
    """PBW normal form of ``mono * g`` as a tuple of ``(mono, coeff)``."""
    if not mono or mono[-1] <= g:
        return ((mono + (g,), Fraction(1)),)
    x = mono[-1]
    rest = mono[:-1]
    out = defaultdict(Fraction)
    # rest.x.g = rest.g.x + rest.[x,g]
    for m, c in times_gen(rest, g):
        for m2, c2 in times_gen(m, x):
            out[m2] += c * c2
    br = lie_bracket(x, g)
    if br is not None:
        k, z = br
        for m, c in times_gen(rest, z):
            out[m] += k * c
    return tuple((m, c) for m, c in out.items() if c)


@lru_cache(maxsize=None)
def mono_mul(a, b):
    """PBW normal form of the product of two PBW monomials."""
    if not b:
        return ((a, Fraction(1)),)
    if not a or a[-1] <= b[0]:
        return ((a + b, Fraction(1)),)
    acc = {a: Fraction(1)}
    for g in b:
        nxt = defaultdict(Fraction)
        for m, c in acc.items():
            for m2, c2 in times_gen(m, g):
                nxt[m2] += c * c2
        acc = nxt
    return tuple((m, c) for m, c in acc.items() if c)


def normal_order_word(word):
    """PBW normal form of an arbitrary word as ``{mono: coeff}``."""
    acc = {ONE: Fraction(1)}
    for g in word:
        nxt = defaultdict(Fraction)
        for m, c in acc.items():
            for m2, c2 in times_gen(m, g):
                nxt[m2] += c * c2
        acc = nxt
    return {m: c for m, c in acc.items() if c}


def rewrite_naive(word, rightmost=False):
    """Unmemoized rewriting of a word into PBW form.

    Repeatedly picks the leftmost (or rightmost) adjacent inversion ``xy``
    and replaces it with ``yx + [x,y]``.  Kept independent of ``times_gen``
    so the two can be compared as a confluence check.
    """
    todo = {tuple(word): Fraction(1)}
    done = defaultdict(Fraction)
    while todo:
        w, c = todo.popitem()
        if not c:
            continue
        positions = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not positions:
            done[w] += c
            continue
        i = positions[-1] if rightmost else positions[0]
        x, y = w[i], w[i + 1]
        swapped = w[:i] + (y, x) + w[i + 2:]
        todo[swapped] = todo.get(swapped, 0) + c
        br = lie_bracket(x, y)
        if br is not None:
            k, z = br
            shorter = w[:i] + (z,) + w[i + 2:]
            todo[shorter] = todo.get(shorter, 0) + c * k
    return {m: c for m, c in done.items() if c}


# -- graded elements -------------------------------------------------------

def _check_order(order):
    if not isinstance(order, int) or order < 0:
        raise ValueError("truncation order must be a nonnegative integer, got %r" % (order,))


class _Graded:
    """Shared machinery for truncated series; ``terms`` maps ``(deg, key)``."""

    __slots__ = ("order", "terms")

    def __init__(self, order, terms=None):
        _check_order(order)
        self.order = order
        clean = {}
        if terms:
            for (d, k), c in terms.items():
                if d <= order and c:
                    clean[d, k] = Fraction(c)
        self.terms = clean

    def _like(self, terms):
        raise NotImplementedError

    def _compatible(self, other):
        if type(other) is not type(self):
            raise TypeError("cannot combine %s with %s"
                            % (type(self).__name__, type(other).__name__))
        if other.order != self.order:
            raise ValueError("truncation order mismatch: %d vs %d"
                             % (self.order, other.order))

    def __add__(self, other):
        if not isinstance(other, _Graded):
            return self + self._scalar(other)
        self._compatible(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        return self._like({k: c * v for k, v in self.terms.items()})

    def shift(self, k=1):
        """Multiply by ``t**k``."""
        return self._like({(d + k, m): c for (d, m), c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, _Graded):
            return self.scale(other)
        self._compatible(other)
        N = self.order
        out = defaultdict(Fraction)
        right = sorted(other.terms.items(), key=lambda kv: kv[0][0])
        for (d1, k1), c1 in self.terms.items():
            for (d2, k2), c2 in right:
                if d1 + d2 > N:
                    break
                for k, c in self._key_mul(k1, k2):
                    out[d1 + d2, k] += c1 * c2 * c
        return self._like(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = self._one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, _Graded):
            if isinstance(other, (int, Fraction)):
                return self == self._scalar(other)
            return NotImplemented
        return (type(self) is type(other) and self.order == other.order
                and self.terms == other.terms)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def truncate(self, order):
        return self._like(self.terms, order)

    def degree(self, d):
        """The coefficient of ``t**d``, as an element of order 0."""
        return self._like({(0, k): c for (dd, k), c in self.terms.items() if dd == d}, 0)

    def sorted_terms(self):
        """Terms in canonical order: by t-degree, then slot-wise by monomial."""
        return sorted(self.terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def diff(self, other, first_only=True):
        """Differing terms as ``[(deg, key, mine, theirs)]`` in sorted order."""
        self._compatible(other)
        out = []
        for k in sorted(set(self.terms) | set(other.terms), key=self._sort_key):
            a, b = self.terms.get(k, 0), other.terms.get(k, 0)
            if a != b:
                out.append((k[0], k[1], Fraction(a), Fraction(b)))
                if first_only:
                    break
        return out

    def __repr__(self):
        from .expr import render
        return render(self)


class UPoly(_Graded):
    """Element of U(L)[[t]] modulo ``t**(order+1)``; keys are PBW monomials."""

    __slots__ = ()
    arity = 1

    def _like(self, terms, order=None):
        return UPoly(self.order if order is None else order, terms)

    def _scalar(self, c):
        return UPoly.scalar(c, self.order)

    def _one(self):
        return UPoly.one(self.order)

    @staticmethod
    def _key_mul(a, b):
        return mono_mul(a, b)

    @staticmethod
    def _sort_key(k):
        return k[0], mono_sort_key(k[1])

    @classmethod
    def scalar(cls, c, order):
        return cls(order, {(0, ONE): c})

    @classmethod
    def one(cls, order):
        return cls.scalar(1, order)

    @classmethod
    def gen(cls, g, order, coeff=1, deg=0):
        return cls(order, {(deg, (g,)): coeff})

    @classmethod
    def mono(cls, m, order, coeff=1, deg=0):
        return cls(order, {(deg, tuple(m)): coeff})

    @classmethod
    def word(cls, word, order, coeff=1, deg=0):
        """Normal-ordered product of a word of generators."""
        c0 = Fraction(coeff)
        return cls(order, {(deg, m): c0 * c for m, c in normal_order_word(word).items()})

    @classmethod
    def from_combo(cls, combo, order):
        return cls(order, {(0, (g,)): c for g, c in combo.items()})

    def items(self):
        for (d, m), c in self.sorted_terms():
            yield d, m, c


def mono_sort_key(m):
    """Lexicographic on generators, with the unit monomial last."""
    return (not m, m)


class TensorPoly(_Graded):
    """Element of U(L)^{(x)k}[[t]] for ``k`` in (2, 3); keys are monomial tuples."""

    __slots__ = ("arity",)

    def __init__(self, arity, order, terms=None):
        if arity not in (2, 3):
            raise ValueError("tensor arity must be 2 or 3, got %r" % (arity,))
        self.arity = arity
        super().__init__(order, terms)

    def _like(self, terms, order=None):
        return TensorPoly(self.arity, self.order if order is None else order, terms)

    def _compatible(self, other):
        super()._compatible(other)
        if other.arity != self.arity:
            raise ValueError("tensor arity mismatch: %d vs %d" % (self.arity, other.arity))

    def _scalar(self, c):
        return TensorPoly.scalar(c, self.arity, self.order)

    def _one(self):
        return TensorPoly.scalar(1, self.arity, self.order)

    def __eq__(self, other):
        res = super().__eq__(other)
        if res is True:
            return self.arity == other.arity
        return res

    __hash__ = None

    @staticmethod
    def _sort_key(k):
        return k[0], tuple(mono_sort_key(m) for m in k[1])

    @staticmethod
    def _key_mul(a, b):
        prods = [mono_mul(x, y) for x, y in zip(a, b)]
        out = [((), Fraction(1))]
        for slot in prods:
            out = [(k + (m,), c * c2) for k, c in out for m, c2 in slot]
        return out

    @classmethod
    def scalar(cls, c, arity, order):
        return cls(arity, order, {(0, (ONE,) * arity): c})

    @classmethod
    def one(cls, arity, order):
        return cls.scalar(1, arity, order)

    def slot(self, i, d=None):
        """Return the distinct monomials appearing in slot ``i``."""
        return sorted({k[i] for (dd, k) in self.terms if d is None or dd == d})


def tensor(*parts):
    """Tensor product of ``UPoly`` factors; t-degrees add."""
    if len(parts) not in (2, 3):
        raise ValueError("tensor() takes 2 or 3 factors")
    order = parts[0].order
    for p in parts:
        if not isinstance(p, UPoly) or p.order != order:
            raise ValueError("tensor() factors must be UPoly of equal order")
    acc = {(0, ()): Fraction(1)}
    for p in parts:
        nxt = defaultdict(Fraction)
        for (d1, k), c1 in acc.items():
            for (d2, m), c2 in p.terms.items():
                if d1 + d2 <= order:
                    nxt[d1 + d2, k + (m,)] += c1 * c2
        acc = nxt
    return TensorPoly(len(parts), order, acc)


# -- slot maps -------------------------------------------------------------

def _as_pieces(value):
    """Normalise the image of a monomial into ``[(deg, keytuple, coeff)]``."""
    if isinstance(value, UPoly):
        return [(d, (m,), c) for (d, m), c in value.terms.items()]
    if isinstance(value, TensorPoly):
        return [(d, k, c) for (d, k), c in value.terms.items()]
    # scalar series: a UPoly supported on the unit monomial, spliced as ()
    raise TypeError("unsupported slot image %r" % (value,))


def map_slot(x, slot, fn, width=1):
    """Apply ``fn`` to every monomial sitting in one tensor slot.

    ``width`` is the number of slots ``fn`` produces: 1 for a ``UPoly``
    image, 2 for a 2-fold tensor image, 0 for a scalar series (a ``UPoly``
    on the unit monomial) such as the counit.  The result is a ``UPoly``
    when one slot remains.
    """
    order = x.order
    if isinstance(x, UPoly):
        arity, items = 1, [((d, (m,)), c) for (d, m), c in x.terms.items()]
    else:
        arity, items = x.arity, list(x.terms.items())
    cache = {}
    out = defaultdict(Fraction)
    for (d, k), c in items:
        m = k[slot]
        if m not in cache:
            img = fn(m)
            if width == 0:
                if any(mm != ONE for (_, mm) in img.terms):
                    raise ValueError("slot image is not a scalar series")
                cache[m] = [(dd, (), cc) for (dd, _), cc in img.terms.items()]
            else:
                cache[m] = _as_pieces(img)
        for dd, sub, cc in cache[m]:
            if d + dd <= order:
                out[d + dd, k[:slot] + sub + k[slot + 1:]] += c * cc
    return _build(arity - 1 + width, order, out)


def _build(arity, order, terms):
    if arity == 1:
        return UPoly(order, {(d, k[0]): c for (d, k), c in terms.items()})
    if arity == 0:
        return UPoly(order, {(d, ONE): c for (d, k), c in terms.items()})
    return TensorPoly(arity, order, terms)


def multiply_slots(x):
    """The multiplication map ``m: A (x) A -> A``."""
    if not isinstance(x, TensorPoly) or x.arity != 2:
        raise ValueError("multiply_slots needs a 2-fold tensor")
    out = defaultdict(Fraction)
    for (d, (a, b)), c in x.terms.items():
        for m, cc in mono_mul(a, b):
            out[d, m] += c * cc
    return UPoly(x.order, out)


def flip(x):
    """Swap the two slots of a 2-fold tensor."""
    return TensorPoly(2, x.order, {(d, (b, a)): c for (d, (a, b)), c in x.terms.items()})


def embed(x, positions, arity):
    """Place a tensor into a wider one, filling the other slots with 1.

    ``embed(r, (0, 2), 3)`` is ``r_{13}``.
    """
    if isinstance(x, UPoly):
        items = [((d, (m,)), c) for (d, m), c in x.terms.items()]
    else:
        items = x.terms.items()
    out = {}
    for (d, k), c in items:
        key = [ONE] * arity
        for pos, m in zip(positions, k):
            key[pos] = m
        out[d, tuple(key)] = c
    return TensorPoly(arity, x.order, out)


# -- undeformed Hopf structure --------------------------------------------

def delta0_mono(mono, order):
    """Primitive coproduct of one monomial: sum over binomial splittings."""
    parts = [((), (), 1)]
    for g, e in factors(mono):
        parts = [(l + (g,) * k, r + (g,) * (e - k), c * comb(e, k))
                 for l, r, c in parts for k in range(e + 1)]
    out = defaultdict(Fraction)
    for l, r, c in parts:
        out[0, (l, r)] += c
    return TensorPoly(2, order, out)


def delta0(x):
    """Primitive coproduct, extended as an algebra morphism."""
    if isinstance(x, TensorPoly):
        raise TypeError("delta0 takes a UPoly")
    return map_slot(x, 0, lambda m: delta0_mono(m, x.order), width=2)


def s0_mono(mono, order):
    sign = -1 if len(mono) % 2 else 1
    return UPoly.word(tuple(reversed(mono)), order, coeff=sign)


def s0(x):
    """Undeformed antipode ``X -> -X`` extended as an anti-morphism."""
    return map_slot(x, 0, lambda m: s0_mono(m, x.order))


def eps_mono(mono, order):
    return UPoly.scalar(1 if mono == ONE else 0, order)


def eps(x):
    """Counit, returned as a scalar series (a ``UPoly`` on the unit monomial)."""
    return UPoly(x.order, {(d, m): c for (d, m), c in x.terms.items() if m == ONE})
