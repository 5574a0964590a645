"""Exact rational functions in ``s = q^{1/2}`` over the rationals.

A value is stored as ``s^shift * num(s) / den(s)`` where ``num`` and ``den``
are coprime polynomials with nonzero constant terms and ``den`` is monic.
That normal form is unique, so equality and hashing are structural.
Polynomial gcds come from FLINT (``python-flint``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import flint

_ONE = flint.fmpq_poly([1])
_ZERO = flint.fmpq_poly([])

Number = Union[int, Fraction, "ScalarQ"]


def _strip_s(p: flint.fmpq_poly) -> tuple[flint.fmpq_poly, int]:
    coeffs = p.coeffs()
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    if k == 0:
        return p, 0
    return flint.fmpq_poly(coeffs[k:]), k


def _monomial(k: int) -> flint.fmpq_poly:
    return flint.fmpq_poly([0] * k + [1])


class ScalarQ:
    __slots__ = ("num", "den", "shift", "_hash")

    def __init__(self, num: flint.fmpq_poly, den: flint.fmpq_poly = _ONE, shift: int = 0,
                 *, normalized: bool = False):
        if not normalized:
            num, den, shift = self._normalize(num, den, shift)
        self.num = num
        self.den = den
        self.shift = shift
        self._hash = None

    @staticmethod
    def _normalize(num, den, shift):
        if den == 0:
            raise ZeroDivisionError("ScalarQ with zero denominator")
        if num == 0:
            return _ZERO, _ONE, 0
        num, a = _strip_s(num)
        den, b = _strip_s(den)
        shift += a - b
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num, r1 = divmod(num, g)
                den, r2 = divmod(den, g)
                assert r1 == 0 and r2 == 0
        lc = den.coeffs()[-1]
        if lc != 1:
            num = num / lc
            den = den / lc
        return num, den, shift

    # constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c: int | Fraction) -> "ScalarQ":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return cls(flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator)]), _ONE, 0, normalized=True)

    @classmethod
    def s_power(cls, k: int) -> "ScalarQ":
        return cls(_ONE, _ONE, int(k), normalized=True)

    @classmethod
    def laurent(cls, coeffs: dict[int, int | Fraction]) -> "ScalarQ":
        """Build ``sum c_k s^k`` from ``{k: c_k}``."""
        items = {k: Fraction(c) for k, c in coeffs.items() if c}
        if not items:
            return ZERO
        lo = min(items)
        hi = max(items)
        poly = flint.fmpq_poly([flint.fmpq(items.get(k, Fraction(0)).numerator,
                                           items.get(k, Fraction(0)).denominator)
                                for k in range(lo, hi + 1)])
        return cls(poly, _ONE, lo)

    @staticmethod
    def coerce(x: Number) -> "ScalarQ":
        if isinstance(x, ScalarQ):
            return x
        if isinstance(x, (int, Fraction)):
            return ScalarQ.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to ScalarQ")

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num == 0

    def is_laurent(self) -> bool:
        return self.den == 1

    def is_monomial(self) -> bool:
        """True for ``c s^k`` with rational ``c``."""
        return self.den == 1 and self.num.degree() == 0

    def monomial_parts(self) -> tuple[Fraction, int]:
        if not self.is_monomial():
            raise ValueError(f"{self} is not a monomial")
        c = self.num.coeffs()[0]
        return Fraction(int(c.p), int(c.q)), self.shift

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: Number) -> "ScalarQ":
        other = ScalarQ.coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        e = min(self.shift, other.shift)
        a = self.num * _monomial(self.shift - e)
        b = other.num * _monomial(other.shift - e)
        if self.den == other.den:
            return ScalarQ(a + b, self.den, e)
        return ScalarQ(a * other.den + b * self.den, self.den * other.den, e)

    __radd__ = __add__

    def __neg__(self) -> "ScalarQ":
        return ScalarQ(-self.num, self.den, self.shift, normalized=True)

    def __sub__(self, other: Number) -> "ScalarQ":
        return self + (-ScalarQ.coerce(other))

    def __rsub__(self, other: Number) -> "ScalarQ":
        return ScalarQ.coerce(other) + (-self)

    def __mul__(self, other: Number) -> "ScalarQ":
        other = ScalarQ.coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        shift = self.shift + other.shift
        if self.den == 1 and other.den == 1:
            return ScalarQ(self.num * other.num, _ONE, shift, normalized=True)
        return ScalarQ(self.num * other.num, self.den * other.den, shift)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarQ":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero ScalarQ")
        return ScalarQ(self.den, self.num, -self.shift)

    def __truediv__(self, other: Number) -> "ScalarQ":
        return self * ScalarQ.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> "ScalarQ":
        return ScalarQ.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "ScalarQ":
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_monomial():
            c, e = self.monomial_parts()
            return ScalarQ.const(c ** k) * ScalarQ.s_power(e * k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ScalarQ.const(other)
        if not isinstance(other, ScalarQ):
            return NotImplemented
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shift, str(self.num), str(self.den)))
        return self._hash

    # formatting -----------------------------------------------------------
    @staticmethod
    def _laurent_str(poly: flint.fmpq_poly, shift: int) -> str:
        terms = []
        for k, c in enumerate(poly.coeffs()):
            if c == 0:
                continue
            c = Fraction(int(c.p), int(c.q))
            terms.append(f"{c}*s^{k + shift}")
        return " + ".join(terms) if terms else "0"

    def numerator_str(self) -> str:
        """Laurent numerator ``s^shift num`` as ``c*s^k`` terms, ascending in ``k``."""
        return self._laurent_str(self.num, self.shift)

    def denominator_str(self) -> str:
        return self._laurent_str(self.den, 0)

    def __repr__(self) -> str:
        if self.den == 1:
            return f"ScalarQ({self.numerator_str()})"
        return f"ScalarQ(({self.numerator_str()}) / ({self.denominator_str()}))"

    def evaluate(self, s_value: Fraction | int) -> Fraction:
        """Exact value at a rational point (used in tests as an independent check)."""
        x = Fraction(s_value)

        def ev(poly):
            out = Fraction(0)
            for c in reversed(poly.coeffs()):
                out = out * x + Fraction(int(c.p), int(c.q))
            return out

        return ev(self.num) / ev(self.den) * x ** self.shift


ZERO = ScalarQ(_ZERO, _ONE, 0, normalized=True)
ONE = ScalarQ(_ONE, _ONE, 0, normalized=True)
S = ScalarQ.s_power(1)
Q = ScalarQ.s_power(2)


def q_power(k: int) -> ScalarQ:
    """``q^k = s^{2k}``."""
    return ScalarQ.s_power(2 * k)


def scalar_coeff(d: int, a: int) -> ScalarQ:
    """``(q_i^{-1} - q_i)^a / q_i^{a(a-1)/2}`` with ``q_i = q^d = s^{2d}``."""
    if a == 0:
        return ONE
    base = ScalarQ.laurent({-2 * d: 1, 2 * d: -1})
    return base ** a * ScalarQ.s_power(-d * a * (a - 1))
