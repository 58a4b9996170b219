from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionkit.errors import (
    DivisionByZeroPolynomial,
    MalformedExpression,
    MalformedNumber,
    ZeroDenominator,
)
from torsionkit.fields import (
    QQ,
    QT,
    Polynomial,
    RationalFunction,
    format_polynomial,
    format_rational_function,
    poly_divmod,
    poly_gcd,
    poly_parse,
    rat_parse,
    ratfun_parse,
)

T = Polynomial.t()


def test_rat_parse_reduces():
    assert rat_parse("3/6") == Fraction(1, 2)
    assert rat_parse("-4/2") == Fraction(-2)
    assert rat_parse("0/7") == Fraction(0)
    assert rat_parse("0/7").denominator == 1
    assert rat_parse("+12") == 12


@pytest.mark.parametrize("bad", ["", "abc", "1.5", "1/2/3", "t", "1 2", "--3"])
def test_rat_parse_malformed(bad):
    with pytest.raises(MalformedNumber):
        rat_parse(bad)


def test_rat_parse_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rat_parse("3/0")


def test_poly_divmod_examples():
    q, r = poly_divmod(T * T - 1, T - 1)
    assert q == T + 1 and r.is_zero
    q, r = poly_divmod(T * T + 1, T)
    assert q == T and r == 1
    q, r = poly_divmod(Polynomial.constant(1), T - 1)
    assert q.is_zero and r == 1


def test_poly_divmod_by_zero():
    with pytest.raises(DivisionByZeroPolynomial):
        poly_divmod(T, Polynomial())


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=5
)


def polynomials(max_degree=4):
    return st.lists(small_fractions, max_size=max_degree + 1).map(Polynomial)


@given(polynomials(), polynomials())
def test_poly_divmod_identity(a, b):
    if b.is_zero:
        return
    q, r = poly_divmod(a, b)
    assert a == q * b + r
    assert r.degree < b.degree


@given(polynomials(2), polynomials(2), polynomials(2))
@settings(max_examples=40)
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


def test_poly_gcd_monic():
    g = poly_gcd((T - 1) * (T + 2), (T - 1) * T)
    assert g == T - 1
    assert poly_gcd(Polynomial(), Polynomial()).is_zero
    g = poly_gcd(2 * (T - 1), 4 * (T - 1))
    assert g == T - 1


def test_ratfun_parse_examples():
    v = ratfun_parse("(t^2-1)/(t-1)")
    assert v.num == T + 1 and v.den == 1
    v = ratfun_parse("1/(2*t-2)")
    assert v.num == Polynomial.constant(Fraction(1, 2)) and v.den == T - 1
    v = ratfun_parse("t")
    assert v.num == T and v.den == 1


def test_ratfun_parse_rational_scalars():
    assert ratfun_parse("3/6") == RationalFunction.constant(Fraction(1, 2))
    assert ratfun_parse("-2") == RationalFunction.constant(-2)


@pytest.mark.parametrize("bad", ["", "t+", "(t", "t^t", "x", "t 1", "^2", "t^(2)"])
def test_ratfun_parse_malformed(bad):
    with pytest.raises(MalformedExpression):
        ratfun_parse(bad)


def test_ratfun_parse_zero_denominator():
    with pytest.raises(DivisionByZeroPolynomial):
        ratfun_parse("1/(t-t)")


def test_poly_parse_rejects_proper_fractions():
    assert poly_parse("t^2-1") == T * T - 1
    with pytest.raises(MalformedExpression):
        poly_parse("1/(t-1)")


def ratfuns():
    return st.builds(
        lambda n, d: RationalFunction(n, d),
        polynomials(2),
        polynomials(2).filter(lambda p: not p.is_zero),
    )


@given(ratfuns(), ratfuns(), ratfuns())
@settings(max_examples=40, deadline=None)
def test_ratfun_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if not a.is_zero:
        assert a * (QT.one / a) == QT.one


@given(ratfuns())
@settings(max_examples=60, deadline=None)
def test_ratfun_canonical_form(v):
    assert v.den.leading == 1 or v.is_zero
    if not v.is_zero:
        assert poly_gcd(v.num, v.den).degree == 0
    # two construction routes land on the same components
    w = RationalFunction(v.num * (T - 1) * 2, v.den * (T - 1) * 2)
    assert w.num == v.num and w.den == v.den


@given(ratfuns())
@settings(max_examples=60, deadline=None)
def test_format_round_trip(v):
    assert ratfun_parse(format_rational_function(v)) == v


@given(polynomials())
@settings(max_examples=60)
def test_poly_format_round_trip(p):
    assert poly_parse(format_polynomial(p)) == p


def test_format_compact_shapes():
    assert format_rational_function(ratfun_parse("1/(t-1)")) == "1/(t-1)"
    assert format_polynomial(T * T - 2 * T) == "t^2-2*t"
    assert format_rational_function(RationalFunction(T, T * T)) == "1/t"
    assert QQ.to_str(Fraction(-7, 3)) == "-7/3"
