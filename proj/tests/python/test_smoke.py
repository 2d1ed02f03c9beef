"""Smoke tests for the quadideal python module."""

from fractions import Fraction

import pytest

import quadideal as qi


@pytest.fixture
def zm5():
    return qi.Order.quadratic(-5)


@pytest.fixture
def zm3():
    return qi.Order.quadratic(-3)


def test_element_arithmetic(zm5):
    w = qi.Element.omega(zm5)
    one = qi.Element(zm5, 1)
    assert (one + w) * (one - w) == qi.Element(zm5, 6)
    assert qi.Element(zm5, 1, 2).norm() == 21
    assert w.conjugate().conjugate() == w
    assert not qi.Element(zm5, Fraction(1, 2), Fraction(1, 2)).is_integral()


def test_ideal_monoid(zm5):
    i = qi.evaluate("<3,1+2w>", zm5)
    j = qi.evaluate("<3,1-2w>", zm5)
    three_r = qi.FractionalIdeal.principal(qi.Element(zm5, 3))
    assert i * j == three_r
    assert repr(i * j) == "[3, 0+3w] den 1"
    unit = qi.FractionalIdeal.unit(zm5)
    assert i * unit == i
    # distinct primes above 3 are comaximal
    assert (i + j).is_unit_ideal()
    assert qi.is_invertible(i)
    assert i * i.inverse() == unit


def test_factorization_roundtrip(zm5):
    six = qi.FractionalIdeal.principal(qi.Element(zm5, 6))
    f = qi.factor_ideal(six)
    assert [(int(p.p), int(e)) for p, e in f.factors] == [(2, 2), (3, 1), (3, 1)]
    assert qi.reconstitute(zm5, f) == six


def test_valuations(zm5):
    p2 = qi.primes_above(zm5, 2)[0]
    assert qi.element_valuation(qi.Element(zm5, 1, 1), p2) == 1
    assert qi.element_valuation(qi.Element(zm5, 0), p2) is None  # v(0) = infinity
    six = qi.FractionalIdeal.principal(qi.Element(zm5, 6))
    assert qi.ideal_valuation(six, p2) == 2


def test_crt_and_approximation(zm5):
    Z = qi.Order.integers()
    mods = [
        (qi.FractionalIdeal.principal(qi.Element(Z, 8)).lattice, qi.Element(Z, 1)),
        (qi.FractionalIdeal.principal(qi.Element(Z, 9)).lattice, qi.Element(Z, 2)),
        (qi.FractionalIdeal.principal(qi.Element(Z, 5)).lattice, qi.Element(Z, 3)),
    ]
    assert qi.crt_system(Z, mods) == qi.Element(Z, 353)

    p2 = qi.primes_above(zm5, 2)[0]
    p3 = qi.primes_above(zm5, 3)[0]
    x = qi.approximate_exact(zm5, [p2, p3], [2, 1])
    assert qi.element_valuation(x, p2) == 2
    assert qi.element_valuation(x, p3) == 1

    a, b = qi.two_generators(p2.ideal)
    regen = qi.FractionalIdeal.from_generators([a, b])
    assert regen == qi.FractionalIdeal.from_integral(p2.ideal)


def test_singular_order(zm3):
    m = qi.IntegralIdeal(zm3, 2, 1, 1)
    fm = qi.FractionalIdeal.from_integral(m)
    assert not qi.is_invertible(fm)
    assert fm * fm.inverse() == fm
    assert qi.multiplier_ring(fm) != qi.FractionalIdeal.unit(zm3)

    six = qi.FractionalIdeal.principal(qi.Element(zm3, 6)).lattice
    comps = qi.primary_decomposition(six)
    prod = qi.FractionalIdeal.unit(zm3)
    for c in comps:
        prod = prod * qi.FractionalIdeal.from_integral(c.component)
    assert prod == qi.FractionalIdeal.from_integral(six)

    with pytest.raises(NotImplementedError):
        qi.factor_ideal(qi.FractionalIdeal.from_integral(m))


def test_class_monoid(zm5, zm3):
    assert len(qi.class_monoid(zm5, 10)) == 2
    assert len(qi.class_monoid(zm3, 10)) == 2
    p2 = qi.primes_above(zm5, 2)[0]
    assert qi.is_principal(p2.ideal) is None
    comp = qi.principal_complement(p2.ideal)
    prod = qi.FractionalIdeal.from_integral(p2.ideal) * qi.FractionalIdeal.from_integral(comp)
    assert qi.is_principal(prod.lattice) is not None


def test_suites(zm5, zm3):
    assert qi.run_suite("divisibility", zm5, cases=20).ok()
    r = qi.run_suite("divisibility", zm3, cases=20)
    assert not r.ok()
    assert r.first_counterexample is not None
    # the witness replays through the expression grammar
    witness = r.first_counterexample["witness"]
    lit = witness.split("I=")[1].split(", J=")[0]
    qi.evaluate(lit, zm3)


def test_errors(zm5):
    with pytest.raises(ValueError):
        qi.evaluate("<>", zm5)
    with pytest.raises(ValueError):
        qi.evaluate("<0>", zm5)
    with pytest.raises(NotImplementedError):
        qi.class_monoid(qi.Order.quadratic(2), 5)
