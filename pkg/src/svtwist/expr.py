"""Parsing and rendering of algebra expressions.

Input grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := generator | rational | 't' | '(' expr ')'
    generator := ('L'|'M'|'N') '[' int ']' | 'Y' '[' int '/2' ']'
               | ('L'|'M'|'N'|'Y') '_' (digits | '{' int ['/2'] '}')

The second generator form is what ``render(..., "text")`` produces, so text
output parses back to the same element.
"""

import json
import re
from fractions import Fraction

from .lie import Family, Gen, checked_index
from .poly import ONE, TensorPoly, UPoly, factors


class ParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__("%s at offset %d" % (message, offset))
        self.offset = offset


class ParityError(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([LMNY])|(t)|([-+*^()\[\]{}/_]))")


def _tokenize(src):
    tokens = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            j = pos
            while src[j].isspace():
                j += 1
            raise ParseError("unexpected character %r" % src[j], j)
        start = m.start(m.lastindex)
        kind = ("int", "gen", "t", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, order):
        self.tokens = _tokenize(src)
        self.i = 0
        self.order = order

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None, kind=None):
        tok = self.tokens[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError("expected %s, got %s" % (want, got), tok[2])
        self.i += 1
        return tok

    def at(self, value):
        return self.peek()[1] == value and self.peek()[0] == "op"

    def expr(self):
        negate = False
        if self.at("+") or self.at("-"):
            negate = self.take()[1] == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.at("*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.at("^"):
            self.take()
            n = int(self.take(kind="int")[1])
            return base ** n
        return base

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            num = int(value)
            if self.at("/"):
                self.take()
                _, den, dpos = self.take(kind="int")
                if int(den) == 0:
                    raise ParseError("zero denominator", dpos)
                return UPoly.scalar(Fraction(num, int(den)), self.order)
            return UPoly.scalar(num, self.order)
        if kind == "t":
            self.take()
            return UPoly.one(self.order).shift(1)
        if kind == "gen":
            return UPoly.gen(self.generator(), self.order)
        if self.at("("):
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError("unexpected %s" % ("end of input" if kind == "end" else repr(value)), pos)

    def signed_int(self):
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        elif self.at("+"):
            self.take()
        return sign * int(self.take(kind="int")[1])

    def generator(self):
        _, letter, pos = self.take(kind="gen")
        fam = Family[letter]
        if self.at("["):
            self.take()
            index2, half = self.index_body()
            self.take("]")
        elif self.at("_"):
            self.take()
            if self.at("{"):
                self.take()
                index2, half = self.index_body()
                self.take("}")
            else:
                index2, half = 2 * int(self.take(kind="int")[1]), False
        else:
            raise ParseError("expected '[' or '_' after generator %s" % letter, self.peek()[2])
        if fam == Family.Y and not (half and index2 % 2):
            raise ParityError("Y needs an odd numerator over 2", pos)
        if fam != Family.Y and half:
            raise ParityError("%s needs an integer index" % letter, pos)
        try:
            checked_index(index2)
        except OverflowError as exc:
            raise ParseError(str(exc), pos) from None
        return Gen(fam, index2)

    def index_body(self):
        n = self.signed_int()
        if self.at("/"):
            self.take()
            _, den, dpos = self.take(kind="int")
            if den != "2":
                raise ParityError("half-integer index must be over 2", dpos)
            return n, True
        return 2 * n, False


def parse_expression(src, order=3):
    """Parse ``src`` into a normal-ordered ``UPoly`` of the given order."""
    if not src or not src.strip():
        raise ParseError("empty expression", 0)
    p = _Parser(src, order)
    value = p.expr()
    p.take(kind="end")
    return value


def parse_generator(src):
    """Parse a single generator such as ``"Y[1/2]"`` or ``"L_3"``."""
    p = _Parser(src, 0)
    if p.peek()[0] != "gen":
        raise ParseError("expected a generator", p.peek()[2])
    g = p.generator()
    p.take(kind="end")
    return g


# -- rendering -------------------------------------------------------------

def gen_text(g):
    return repr(g)


def mono_text(m):
    if m == ONE:
        return "1"
    return "*".join(gen_text(g) + ("^%d" % e if e > 1 else "") for g, e in factors(m))


def render_key(key):
    if key == ONE or isinstance(key[0], Gen):
        return mono_text(key)
    return " (x) ".join(mono_text(m) for m in key)


def _coeff_prefix(c, body_is_one):
    """Leading sign and ``coeff*`` text for one term."""
    sign = "-" if c < 0 else "+"
    c = abs(c)
    if c == 1:
        return sign, "" if not body_is_one else "1"
    return sign, str(c) + ("" if body_is_one else "*")


def _t_text(d):
    return "" if d == 0 else ("t" if d == 1 else "t^%d" % d)


def _term_text(d, key, c, is_tensor):
    if is_tensor:
        body = " (x) ".join(mono_text(m) for m in key)
        body_is_one = False
    else:
        body = "" if key == ONE else mono_text(key)
        body_is_one = not body
    t = _t_text(d)
    if body_is_one and t:
        body, body_is_one = t, False
        t = ""
    sign, coeff = _coeff_prefix(c, body_is_one)
    text = coeff + body + ("*" + t if t else "")
    return sign, text


def render_text(x):
    is_tensor = isinstance(x, TensorPoly)
    parts = []
    for (d, key), c in x.sorted_terms():
        sign, text = _term_text(d, key, c, is_tensor)
        if not parts:
            parts.append(("-" if sign == "-" else "") + text)
        else:
            parts.append(" %s %s" % (sign, text))
    return "".join(parts) if parts else "0"


def _gen_json(g):
    if g.index2 % 2:
        return {"fam": g.family.name, "num": g.index2, "den": 2}
    return {"fam": g.family.name, "num": g.index2 // 2, "den": 1}


def to_json_obj(x):
    slots = x.arity
    terms = []
    for (d, key), c in x.sorted_terms():
        keys = key if slots > 1 else (key,)
        terms.append({
            "t": d,
            "monos": [[[_gen_json(g), e] for g, e in factors(m)] for m in keys],
            "coeff": "%d/%d" % (c.numerator, c.denominator),
        })
    return {"order": x.order, "terms": terms}


def render_json(x):
    return json.dumps(to_json_obj(x), separators=(",", ":"))


def gen_latex(g):
    if g.index2 % 2:
        sign = "-" if g.index2 < 0 else ""
        return "%s_{%s\\frac{%d}{2}}" % (g.family.name, sign, abs(g.index2))
    return "%s_{%d}" % (g.family.name, g.index2 // 2)


def mono_latex(m):
    if m == ONE:
        return "1"
    return " ".join(gen_latex(g) + ("^{%d}" % e if e > 1 else "") for g, e in factors(m))


def _frac_latex(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "\\frac{%d}{%d}" % (c.numerator, c.denominator)


def render_latex(x):
    is_tensor = isinstance(x, TensorPoly)
    parts = []
    for (d, key), c in x.sorted_terms():
        if is_tensor:
            body = " \\otimes ".join(mono_latex(m) for m in key)
        else:
            body = mono_latex(key)
        t = "" if d == 0 else (" t" if d == 1 else " t^{%d}" % d)
        mag = abs(c)
        if mag == 1:
            text = body if (body != "1" or not t) else ""
        else:
            text = _frac_latex(mag) + ("" if body == "1" and not is_tensor else " " + body)
        text = (text + t).strip()
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(("-" if sign == "-" else "") + text)
        else:
            parts.append(" %s %s" % (sign, text))
    return "".join(parts) if parts else "0"


def render(x, fmt="text"):
    """Serialise a ``UPoly`` or ``TensorPoly`` as text, json or latex."""
    if fmt == "text":
        return render_text(x)
    if fmt == "json":
        return render_json(x)
    if fmt == "latex":
        return render_latex(x)
    raise ValueError("unknown format %r" % (fmt,))
