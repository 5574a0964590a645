"""Index-level shadow of the quantum twist: reversing the word and inverting ``u``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cartan import CartanData, Weight
from .exponents import a_matrix, b_matrix, quasi_comm_exponent_direct, quasi_comm_exponent_reverse
from .subexpr import lp, product_over, reverse_indices, rp
from .weyl import WeylElement, from_word, inverse, roots_of_word


@dataclass(frozen=True)
class TwistCorrespondence:
    word: tuple[int, ...]
    reversed_word: tuple[int, ...]
    u: WeylElement
    u_inverse: WeylElement
    rp: frozenset[int]
    lp: frozenset[int]
    rp_of_reversed: frozenset[int]
    lp_of_reversed: frozenset[int]

    @property
    def n(self) -> int:
        return len(self.word)

    def reverse_index(self, k: int) -> int:
        return self.n + 1 - k

    def consistent(self) -> bool:
        n = self.n
        return (reverse_indices(self.rp, n) == self.lp_of_reversed
                and reverse_indices(self.lp, n) == self.rp_of_reversed)

    def to_json(self) -> dict:
        return {"word": list(self.word), "reversed_word": list(self.reversed_word),
                "u": list(self.u.word), "u_inverse": list(self.u_inverse.word),
                "rp": sorted(self.rp), "lp": sorted(self.lp),
                "rp_reversed": sorted(self.rp_of_reversed), "lp_reversed": sorted(self.lp_of_reversed),
                "consistent": self.consistent()}


def twist_indices(cartan: CartanData, word: Sequence[int], u: WeylElement) -> TwistCorrespondence:
    word = tuple(word)
    roots_of_word(cartan, word)
    rword = tuple(reversed(word))
    uinv = inverse(u)
    return TwistCorrespondence(word, rword, u, uinv,
                               rp(cartan, word, u), lp(cartan, word, u),
                               rp(cartan, rword, uinv), lp(cartan, rword, uinv))


def matrix_correspondence_check(cartan: CartanData, word: Sequence[int], u: WeylElement,
                                u_reversed: WeylElement | None = None) -> bool:
    """``b(word, u)`` equals ``a(reversed word, u^{-1})`` with indices ``k -> N+1-k``.

    ``u_reversed`` overrides the element used on the reversed side (negative controls).
    """
    word = tuple(word)
    n = len(word)
    b = b_matrix(cartan, word, u)
    a = a_matrix(cartan, tuple(reversed(word)), inverse(u) if u_reversed is None else u_reversed)
    if sorted(n + 1 - r for r in a.rows) != list(b.rows):
        return False
    return all(b.entries[(l, k)] == a.entries[(n + 1 - l, n + 1 - k)]
               for l in b.rows for k in range(1, n + 1))


@dataclass(frozen=True)
class WeightLabel:
    relabeled: Weight
    low: Weight
    high: Weight


def twist_weight_label(u: WeylElement, w: WeylElement, lam: Sequence[int]) -> WeightLabel:
    """Minor label ``(u(u^{-1} lam), w(u^{-1} lam))`` attached to ``lam``."""
    mu = inverse(u).apply_to_weight(lam)
    return WeightLabel(mu, u.apply_to_weight(mu), w.apply_to_weight(mu))


def reverse_sequence_labels(cartan: CartanData, word: Sequence[int], u: WeylElement) -> dict[int, tuple]:
    """Labels of the reverse normal sequence: prefix length and ``(low, high)`` weights
    of ``Delta_{u-bar_{>=k}(mu), w_{>=k}(mu)}`` with ``mu = u-bar_{>=k}^{-1} varpi_{i_k}``.
    """
    word = tuple(word)
    n = len(word)
    LP = lp(cartan, word, u)
    out = {}
    for k in range(1, n + 1):
        if k in LP:
            continue
        ubar = product_over(cartan, word, LP, k, n)
        wsuf = from_word(cartan, word[k - 1:])
        lab = twist_weight_label(ubar, wsuf, cartan.fundamental_weight(word[k - 1]))
        out[k] = (k - 1, lab.low, lab.high)
    return out


def transported_direct_labels(cartan: CartanData, word: Sequence[int], u: WeylElement) -> dict[int, tuple]:
    """Direct normal-sequence labels of ``(reversed word, u^{-1})`` pushed through the twist."""
    word = tuple(word)
    n = len(word)
    rword = tuple(reversed(word))
    uinv = inverse(u)
    RPr = rp(cartan, rword, uinv)
    out = {}
    for kk in range(1, n + 1):
        if kk in RPr:
            continue
        k = n + 1 - kk
        # direct label on the reversed side: (u'_{<=kk}, w'_{<=kk}, varpi); the twist sends
        # Delta_{x^{-1} lam, y^{-1} lam} to Delta_{x(x^{-1}..)}, i.e. invert both elements
        x = inverse(product_over(cartan, rword, RPr, 1, kk))
        y = inverse(from_word(cartan, rword[:kk]))
        lab = twist_weight_label(x, y, cartan.fundamental_weight(word[k - 1]))
        out[k] = (k - 1, lab.low, lab.high)
    return out


def reverse_exponents_agree(cartan: CartanData, word: Sequence[int], u: WeylElement) -> bool:
    """Reverse-sequence exponents equal the direct exponents of the reversed data."""
    n = len(word)
    rword = tuple(reversed(word))
    LP = lp(cartan, word, u)
    gens = [k for k in range(1, n + 1) if k not in LP]
    for k in gens:
        for l in gens:
            if k < l:
                e1 = quasi_comm_exponent_reverse(cartan, word, u, k, l)
                e2 = quasi_comm_exponent_direct(cartan, rword, inverse(u), n + 1 - l, n + 1 - k)
                if e1 != e2:
                    return False
    return True
