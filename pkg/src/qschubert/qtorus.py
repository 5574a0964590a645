"""Quantum tori with exact rational-function coefficients.

``Y_k Y_l = s^{skew[k][l]} Y_l Y_k``.  The monomial ``Y^e`` always denotes the
ordered product ``Y_1^{e_1} ... Y_n^{e_n}``, which fixes every scalar below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BadShape, LengthMismatch, MixedTori, NotMonomial
from .scalars import ONE, ZERO, Number, ScalarQ

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class CommutationMatrix:
    skew: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        skew = tuple(tuple(int(x) for x in row) for row in self.skew)
        n = len(skew)
        if any(len(row) != n for row in skew):
            raise LengthMismatch("commutation matrix must be square")
        for k in range(n):
            for l in range(n):
                if skew[k][l] != -skew[l][k]:
                    raise BadShape(f"commutation matrix not skew at ({k + 1},{l + 1})")
        object.__setattr__(self, "skew", skew)

    @property
    def n(self) -> int:
        return len(self.skew)

    @classmethod
    def from_lower(cls, n: int, lower: Mapping[tuple[int, int], int]) -> "CommutationMatrix":
        """Build from entries ``(k, l) -> skew[k][l]`` with ``k > l`` (0-based)."""
        m = [[0] * n for _ in range(n)]
        for (k, l), v in lower.items():
            m[k][l] = v
            m[l][k] = -v
        return cls(tuple(tuple(r) for r in m))

    def pairing(self, e: Sequence[int], f: Sequence[int]) -> int:
        """``sum_{k,l} e_k f_l skew[k][l]``: ``Y^e Y^f = s^{pairing} Y^f Y^e``."""
        self._check(e, f)
        return sum(e[k] * f[l] * self.skew[k][l]
                   for k in range(self.n) if e[k] for l in range(self.n) if f[l])

    def _check(self, *vecs: Sequence[int]) -> None:
        for v in vecs:
            if len(v) != self.n:
                raise LengthMismatch(f"exponent vector {tuple(v)} has length != {self.n}")

    def mono_mul_cocycle(self, e: Sequence[int], f: Sequence[int]) -> int:
        """``c(e, f)`` with ``Y^e Y^f = s^{c(e,f)} Y^{e+f}``."""
        self._check(e, f)
        total = 0
        for k in range(self.n):
            if e[k]:
                row = self.skew[k]
                for l in range(k):
                    if f[l]:
                        total += e[k] * f[l] * row[l]
        return total

    def generator(self, i: int) -> "TorusElement":
        """``Y_i`` for a 0-based index."""
        e = tuple(1 if j == i else 0 for j in range(self.n))
        return TorusElement(self, {e: ONE})

    def one(self) -> "TorusElement":
        return TorusElement(self, {(0,) * self.n: ONE})

    def zero(self) -> "TorusElement":
        return TorusElement(self, {})

    def monomial(self, e: Sequence[int], coeff: Number = 1) -> "TorusElement":
        self._check(e)
        return TorusElement(self, {tuple(e): ScalarQ.coerce(coeff)})

    def scalar(self, c: Number) -> "TorusElement":
        return self.monomial((0,) * self.n, c)

    def ordered_monomial(self, exponents: Mapping[int, int], descending: bool = True) -> "TorusElement":
        """``prod Y_j^{m_j}`` over the given 0-based indices, taken in decreasing
        (or increasing) index order, as a single normalized term.
        """
        out = self.one()
        for j in sorted(exponents, reverse=descending):
            e = [0] * self.n
            e[j] = exponents[j]
            out = out * self.monomial(e)
        return out

    def transport(self, M: Sequence[Sequence[int]]) -> "CommutationMatrix":
        return transport_commutation(self, M)


def transport_commutation(cm: CommutationMatrix, M: Sequence[Sequence[int]]) -> CommutationMatrix:
    """Commutation matrix ``M^T skew M`` of the monomials whose exponent vectors
    are the columns of ``M`` (an ``n x p`` integer matrix).
    """
    if len(M) != cm.n:
        raise LengthMismatch(f"M has {len(M)} rows, torus has {cm.n} generators")
    p = len(M[0]) if M else 0
    cols = [tuple(M[r][c] for r in range(cm.n)) for c in range(p)]
    return CommutationMatrix(tuple(tuple(cm.pairing(cols[a], cols[b]) for b in range(p))
                                   for a in range(p)))


class TorusElement:
    """Finite sum of ``c_e Y^e`` with nonzero :class:`ScalarQ` coefficients."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: CommutationMatrix, terms: Mapping[Exponent, ScalarQ]):
        self.torus = torus
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    def _same(self, other: "TorusElement") -> None:
        if self.torus is not other.torus and self.torus != other.torus:
            raise MixedTori("elements live in different quantum tori")

    def _lift(self, other) -> "TorusElement":
        if isinstance(other, TorusElement):
            self._same(other)
            return other
        return self.torus.scalar(other)

    def __add__(self, other) -> "TorusElement":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TorusElement(self.torus, out)

    __radd__ = __add__

    def __neg__(self) -> "TorusElement":
        return TorusElement(self.torus, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "TorusElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "TorusElement":
        return self._lift(other) - self

    def scalar_mul(self, c: Number) -> "TorusElement":
        c = ScalarQ.coerce(c)
        return TorusElement(self.torus, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other) -> "TorusElement":
        if not isinstance(other, TorusElement):
            return self.scalar_mul(other)
        self._same(other)
        tor = self.torus
        out: dict[Exponent, ScalarQ] = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                g = tuple(a + b for a, b in zip(e, f))
                coeff = c * d * ScalarQ.s_power(tor.mono_mul_cocycle(e, f))
                out[g] = out[g] + coeff if g in out else coeff
        return TorusElement(tor, out)

    def __rmul__(self, other) -> "TorusElement":
        return self.scalar_mul(other)

    def __pow__(self, k: int) -> "TorusElement":
        if k < 0:
            return invert_monomial(self) ** (-k)
        out = self.torus.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusElement):
            if isinstance(other, (int, ScalarQ)):
                return self == self.torus.scalar(other)
            return NotImplemented
        return self.torus == other.torus and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r})*Y^{list(e)}" for e, c in sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def single_term(self) -> tuple[Exponent, ScalarQ]:
        if len(self.terms) != 1:
            raise NotMonomial(f"element has {len(self.terms)} terms")
        return next(iter(self.terms.items()))

    def is_central(self) -> bool:
        """Commutes with every generator: ``skew . e = 0`` for each exponent ``e``."""
        n = self.torus.n
        return all(sum(self.torus.skew[k][l] * e[l] for l in range(n)) == 0
                   for e in self.terms for k in range(n))

    def to_json(self) -> list[dict]:
        return [{"e": list(e), "num": c.numerator_str(), "den": c.denominator_str()}
                for e, c in sorted(self.terms.items())]


def invert_monomial(x: TorusElement) -> TorusElement:
    """Inverse of a single term ``c Y^e``."""
    e, c = x.single_term()
    neg = tuple(-a for a in e)
    # Y^e Y^{-e} = s^{c(e,-e)} so the inverse carries s^{-c(e,-e)}
    shift = x.torus.mono_mul_cocycle(e, neg)
    return TorusElement(x.torus, {neg: c.inverse() * ScalarQ.s_power(-shift)})


def mul(x: TorusElement, y: TorusElement) -> TorusElement:
    return x * y


def add(x: TorusElement, y: TorusElement) -> TorusElement:
    return x + y


def scalar_mul(c: Number, x: TorusElement) -> TorusElement:
    return x.scalar_mul(c)


def product(elements: Iterable[TorusElement], torus: CommutationMatrix) -> TorusElement:
    out = torus.one()
    for x in elements:
        out = out * x
    return out
