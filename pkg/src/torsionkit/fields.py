"""Exact scalars: arbitrary-precision rationals, polynomials in t over Q,
and the fraction field Q(t).

Every value is immutable and arithmetic is exact; there are no tolerances
anywhere in the package.  Rationals are ``fractions.Fraction`` (already
reduced, positive denominator, zero is 0/1).  Polynomials store Fraction
coefficients indexed by degree.  Rational functions keep a reduced
numerator over a monic denominator so that equal values compare equal
component-wise.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import (
    DivisionByZeroPolynomial,
    MalformedExpression,
    MalformedNumber,
    ZeroDenominator,
)

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")

NEG_INFINITY = -math.inf  # degree of the zero polynomial


def rat_parse(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a canonical Fraction."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise MalformedNumber(f"not a rational scalar: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational coefficient")


class Polynomial:
    """Univariate polynomial in t with Fraction coefficients (index = degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @staticmethod
    def constant(c) -> Polynomial:
        return Polynomial((_as_fraction(c),))

    @staticmethod
    def t(power: int = 1) -> Polynomial:
        return Polynomial([0] * power + [1])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def monic(self) -> Polynomial:
        if self.is_zero or self.leading == 1:
            return self
        inv = 1 / self.leading
        return Polynomial(c * inv for c in self.coeffs)

    def __add__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return Polynomial()
            return Polynomial(c * a for a in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return self.is_zero
            return len(self.coeffs) == 1 and self.coeffs[0] == c
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _as_polynomial(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial((_as_fraction(x),))
    return NotImplemented


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder: a = q*b + r with deg r < deg b."""
    if b.is_zero:
        raise DivisionByZeroPolynomial("polynomial division by zero")
    if a.is_zero or a.degree < b.degree:
        return Polynomial(), a
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead_inv = 1 / b.leading
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        c = rem[k + db] * lead_inv
        if c == 0:
            continue
        quot[k] = c
        for j, bc in enumerate(b.coeffs):
            rem[k + j] -= c * bc
    return Polynomial(quot), Polynomial(rem[:db])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Element of Q(t): reduced numerator over a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_polynomial(num)
        if num is NotImplemented:
            raise TypeError("numerator must be a polynomial or rational")
        den = Polynomial.constant(1) if den is None else _as_polynomial(den)
        if den is NotImplemented:
            raise TypeError("denominator must be a polynomial or rational")
        if den.is_zero:
            raise DivisionByZeroPolynomial("zero denominator in Q(t)")
        if num.is_zero:
            num, den = Polynomial(), Polynomial.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != 1:
                inv = 1 / lead
                num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def constant(c) -> RationalFunction:
        return RationalFunction(Polynomial.constant(c))

    @staticmethod
    def t() -> RationalFunction:
        return RationalFunction(Polynomial.t())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == 1

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFunction)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return _RF_ZERO
        # cross-reduce before multiplying to keep degrees small
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        if g1.degree > 0:
            a, d = a // g1, d // g1
        g2 = poly_gcd(c, b)
        if g2.degree > 0:
            c, b = c // g2, b // g2
        return RationalFunction(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero in Q(t)")
        return self * RationalFunction(other.den, other.num)

    def __rtruediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("zero to a negative power in Q(t)")
            return RationalFunction(self.den, self.num) ** (-n)
        out = _RF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({format_rational_function(self)!r})"


def _as_ratfun(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction(Polynomial((_as_fraction(x),)))
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    return NotImplemented


_RF_ZERO = RationalFunction(Polynomial())
_RF_ONE = RationalFunction(Polynomial.constant(1))


# --- parsing of Q(t) expressions ---

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(t)|([+\-*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise MalformedExpression(
                f"unexpected character {text[pos:].lstrip()[0]!r} in {text!r}"
            )
        if m.group(1):
            tokens.append(("int", m.group(1)))
        elif m.group(2):
            tokens.append(("t", "t"))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _ExprParser:
    """Recursive-descent parser for +, -, *, /, ^ and parentheses over t."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise MalformedExpression(f"unexpected end of expression in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> RationalFunction:
        value = self.expr()
        if self.peek() is not None:
            raise MalformedExpression(
                f"trailing input {self.peek()[1]!r} in {self.text!r}"
            )
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek() and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek() and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise DivisionByZeroPolynomial(
                        f"division by zero in {self.text!r}"
                    )
                value = value / rhs
        return value

    def unary(self) -> RationalFunction:
        sign = 1
        while self.peek() and self.peek()[1] in "+-":
            if self.take()[1] == "-":
                sign = -sign
        value = self.power()
        return value if sign == 1 else -value

    def power(self) -> RationalFunction:
        value = self.atom()
        if self.peek() and self.peek()[1] == "^":
            self.take()
            kind, text = self.take()
            if kind != "int":
                raise MalformedExpression(
                    f"exponent must be a nonnegative integer in {self.text!r}"
                )
            value = value ** int(text)
        return value

    def atom(self) -> RationalFunction:
        kind, text = self.take()
        if kind == "int":
            return RationalFunction.constant(int(text))
        if kind == "t":
            return RationalFunction.t()
        if text == "(":
            value = self.expr()
            tok = self.peek()
            if tok is None or tok[1] != ")":
                raise MalformedExpression(f"missing ')' in {self.text!r}")
            self.take()
            return value
        raise MalformedExpression(f"unexpected {text!r} in {self.text!r}")


def ratfun_parse(text: str) -> RationalFunction:
    """Parse an arithmetic expression in t into a canonical RationalFunction."""
    if not text.strip():
        raise MalformedExpression("empty expression")
    return _ExprParser(text).parse()


def poly_parse(text: str) -> Polynomial:
    """Parse an expression that must denote a polynomial in t."""
    value = ratfun_parse(text)
    if not value.is_polynomial:
        raise MalformedExpression(f"not a polynomial in t: {text!r}")
    return value.num


# --- formatting (round-trips through the parsers above) ---

def _format_term(coeff: Fraction, power: int) -> str:
    if power == 0:
        return str(coeff)
    var = "t" if power == 1 else f"t^{power}"
    if coeff == 1:
        return var
    if coeff == -1:
        return f"-{var}"
    return f"{coeff}*{var}"


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        term = _format_term(c, power)
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append("-" + term[1:])
        else:
            parts.append("+" + term)
    return "".join(parts)


def _term_count(p: Polynomial) -> int:
    return sum(1 for c in p.coeffs if c != 0)


def _needs_parens_as_denominator(p: Polynomial) -> bool:
    # safe without parens only for a bare power of t (monic monomial): the
    # string "1/2*t" would re-parse as (1/2)*t
    if _term_count(p) != 1:
        return True
    return p.leading != 1


def format_rational_function(r: RationalFunction) -> str:
    num = format_polynomial(r.num)
    if r.is_polynomial:
        return num
    if _term_count(r.num) > 1:
        num = f"({num})"
    den = format_polynomial(r.den)
    if _needs_parens_as_denominator(r.den):
        den = f"({den})"
    return f"{num}/{den}"


# --- coefficient domains ---

class Ring:
    """One of the three scalar domains a matrix can live over."""

    name: str
    is_field = False

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def to_str(self, x) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class _RationalField(Ring):
    name = "Q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")

    def parse(self, text: str):
        return rat_parse(text)

    def to_str(self, x) -> str:
        return str(x)


class _RationalFunctionField(Ring):
    name = "Q(t)"
    is_field = True
    zero = _RF_ZERO
    one = _RF_ONE

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            return x
        out = _as_ratfun(x)
        if out is NotImplemented:
            raise TypeError(f"cannot coerce {type(x).__name__} into Q(t)")
        return out

    def parse(self, text: str):
        return ratfun_parse(text)

    def to_str(self, x) -> str:
        return format_rational_function(x)


class _PolynomialRing(Ring):
    name = "Q[t]"
    is_field = False
    zero = Polynomial()
    one = Polynomial.constant(1)

    def coerce(self, x):
        if isinstance(x, Polynomial):
            return x
        out = _as_polynomial(x)
        if out is NotImplemented:
            raise TypeError(f"cannot coerce {type(x).__name__} into Q[t]")
        return out

    def parse(self, text: str):
        return poly_parse(text)

    def to_str(self, x) -> str:
        return format_polynomial(x)


QQ = _RationalField()
QT = _RationalFunctionField()
QPOLY = _PolynomialRing()

FIELD_BY_NAME = {"Q": QQ, "Q(t)": QT}
