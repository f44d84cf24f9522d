
import pytest
from hypothesis import given, settings, strategies as st

from svtwist.hopf import (antipode_l_report, closed_form_antipode, closed_form_coproduct,
                          compare_closed_vs_twisted, cybe_terms, multiply_slots, antipode_on_slot,
                          r_matrix, random_products, twisted_antipode, twisted_coproduct,
                          verify_classical_limit, verify_cybe, verify_homomorphism,
                          verify_hopf_axioms)
from svtwist.lie import L, M, N, Y, TwistContext, generators
from svtwist.poly import TensorPoly, UPoly, delta0, s0, tensor
from svtwist.twist import series_power

CTX = TwistContext(1, 3)


def ok(checks):
    return all(c.ok for c in checks)


def g(x, ctx=CTX):
    return UPoly.gen(x, ctx.order)


def test_coproduct_examples():
    one = UPoly.one(3)
    assert twisted_coproduct(g(M(2)), CTX) == tensor(g(M(2)), series_power(2, CTX)) + tensor(one, g(M(2)))
    assert twisted_coproduct(one, CTX) == TensorPoly.one(2, 3)
    e = g(CTX.e)
    assert twisted_coproduct(e, CTX) == tensor(e, one - e.shift(1)) + tensor(one, e)


def test_coproduct_order_mismatch():
    with pytest.raises(ValueError):
        twisted_coproduct(UPoly.one(2), CTX)


def test_antipode_examples():
    assert twisted_antipode(g(M(4)), CTX) == -(series_power(-2, CTX) * g(M(4)))
    assert twisted_antipode(UPoly.one(3), CTX) == UPoly.one(3)
    he = UPoly.word((N(0), CTX.e), 3)
    assert twisted_antipode(g(N(0)), CTX) == -g(N(0)) + he.shift(1)


def test_closed_form_examples():
    one = UPoly.one(3)
    # third term of Delta(Y_q) vanishes at q = p
    assert closed_form_coproduct(CTX.e, CTX) == tensor(g(CTX.e), series_power(1, CTX)) + tensor(one, g(CTX.e))
    # S(Y_{p-1}) with p - q = 1
    q = Y(-1)
    expected = -(series_power(-1, CTX) * (g(q) + ((g(N(0)) - 1) * g(M(0))).shift(1)))
    assert closed_form_antipode(q, CTX) == expected
    with pytest.raises(ValueError):
        closed_form_antipode(L(1), CTX, variant="other")


@pytest.mark.parametrize("p2", [1, -1, 3])
def test_coproduct_closed_forms_all_families(p2):
    ctx = TwistContext(p2, 3)
    assert ok(compare_closed_vs_twisted(generators(4), ctx, route="coproduct"))


@pytest.mark.parametrize("p2", [1, -1, 3])
def test_antipode_closed_forms_m_and_n(p2):
    ctx = TwistContext(p2, 3)
    gens = generators(4, "MN")
    assert ok(compare_closed_vs_twisted(gens, ctx, route="antipode"))


@pytest.mark.parametrize("p2", [1, -1, 3])
def test_antipode_of_y_follows_commutation_rules(p2):
    # the twisted antipode carries (q - p); at q = p both signs agree
    ctx = TwistContext(p2, 3)
    for q in generators(5, "Y"):
        twisted = twisted_antipode(g(q, ctx), ctx)
        assert closed_form_antipode(q, ctx, "commuted") == twisted
        assert (closed_form_antipode(q, ctx, "standard") == twisted) == (q == ctx.e)


def test_antipode_mismatch_detail_names_alternative():
    checks = compare_closed_vs_twisted([Y(-1)], CTX, route="antipode")
    assert not checks[0].ok and "(q-p) matches" in checks[0].detail


def test_antipode_l_report_is_deterministic():
    lines, axiom_ok = antipode_l_report(CTX, 4)
    assert axiom_ok
    assert lines == antipode_l_report(CTX, 4)[0]
    assert len(lines) == len(generators(4, "L"))
    # n = 0 cannot tell the two coefficients apart
    assert "both coefficients agree" in lines[len(lines) // 2]
    assert all("(p-n/2)" in line for i, line in enumerate(lines) if i != len(lines) // 2)


@pytest.mark.parametrize("p2", [1, -1, 3])
def test_antipode_of_l_matches_minus_sign_variant(p2):
    ctx = TwistContext(p2, 3)
    for n in generators(4, "L"):
        assert closed_form_antipode(n, ctx, "commuted") == twisted_antipode(g(n, ctx), ctx)


def test_axiom_examples():
    D = twisted_coproduct(g(M(1)), CTX)
    assert multiply_slots(antipode_on_slot(D, 0, CTX)).is_zero()
    assert ok(verify_hopf_axioms(UPoly.one(3), CTX))
    assert ok(verify_hopf_axioms(g(Y(1)), CTX))


@pytest.mark.parametrize("p2", [1, -1, 3])
def test_axioms_on_generators(p2):
    ctx = TwistContext(p2, 3)
    for x in generators(3):
        assert ok(verify_hopf_axioms(g(x, ctx), ctx, repr(x)))


def test_axioms_on_random_products():
    for word, x in random_products(CTX, 3, 15, seed=5):
        assert ok(verify_hopf_axioms(x, CTX))


def test_homomorphism_random_pairs():
    samples = random_products(CTX, 4, 40, seed=3)
    for (_, x), (_, y) in zip(samples[::2], samples[1::2]):
        assert ok(verify_homomorphism(x, y, CTX))


def test_axiom_check_detects_wrong_structure():
    # the undeformed coproduct is not a morphism into the twisted structure
    x, y = g(L(2)), g(N(0))
    assert twisted_coproduct(x * y, CTX) != delta0(x) * twisted_coproduct(y, CTX)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(generators(4)), st.sampled_from(generators(4)))
def test_classical_limit(a, b):
    x = UPoly.word((a, b), 3)
    assert ok(verify_classical_limit(x, CTX))
    assert twisted_antipode(x, CTX).degree(0) == s0(x).degree(0)


def test_cybe():
    r = r_matrix(CTX)
    h, e = UPoly.gen(N(0), 0), UPoly.gen(CTX.e, 0)
    _, r12_r23, _ = cybe_terms(r)
    assert r12_r23 == tensor(e, e, h) - tensor(h, e, e)
    assert verify_cybe(CTX).ok
    assert verify_cybe(CTX, TensorPoly(2, 0)).ok


def test_cybe_rejects_non_solution():
    h, e = UPoly.gen(N(0), 0), UPoly.gen(CTX.e, 0)
    assert not verify_cybe(CTX, tensor(h, e) + tensor(e, h)).ok
