"""Pass/fail records produced by the verification routines."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        status = "ok  " if self.ok else "FAIL"
        return "%s %s%s" % (status, self.name, (": " + self.detail) if self.detail else "")


def describe_key(key):
    from .expr import render_key
    return render_key(key)


def compare(name, lhs, rhs, full=False):
    """Exact comparison of two series.

    On mismatch the detail names the first differing ``(t-degree, monomial)``
    with both coefficients, or every differing term when ``full`` is set.
    """
    diffs = lhs.diff(rhs, first_only=not full)
    if not diffs:
        return Check(name, True)
    detail = "; ".join("t^%d %s: lhs %s, rhs %s" % (d, describe_key(key), a, b)
                       for d, key, a, b in diffs)
    return Check(name, False, detail)


def summary(checks):
    """Machine-parseable last line: ``PASS n=...`` or ``FAIL at ...``."""
    checks = list(checks)
    for c in checks:
        if not c.ok:
            return "FAIL at %s (n=%d)" % (c.name, len(checks))
    return "PASS n=%d" % len(checks)
