"""Interval permutations, the chains they induce, and their toric frames."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .cartan import CartanData, RootVec, Weight
from .errors import InternalError, NotAPermutation, NotBelow
from .exponents import (combine_roots, deg2_decomposition, quasi_comm_exponent_direct,
                        quasi_comm_exponent_reverse, reverse_pairing, word_roots)
from .subexpr import lp, product_over, rp
from .weyl import (WeylElement, act_word_on_weight, bruhat_leq, from_word, inverse,
                   left_multiply_by_simple, multiply_by_simple)


@dataclass(frozen=True)
class PiElement:
    """A permutation whose prefixes ``pi([1,k])`` are intervals ``[c(k), d(k)]``."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if not xi_contains(self.perm):
            raise NotAPermutation(f"{list(self.perm)} is not an interval permutation")

    @property
    def n(self) -> int:
        return len(self.perm)

    def c(self, k: int) -> int:
        return min(self.perm[:k])

    def d(self, k: int) -> int:
        return max(self.perm[:k])

    def takes_right_end(self, k: int) -> bool:
        """``pi(k) = d(k)``; for ``k = 1`` both ends coincide and this is True."""
        return self.perm[k - 1] == self.d(k)

    def step_of(self, position: int) -> int:
        return self.perm.index(position) + 1


def xi_contains(perm: Sequence[int]) -> bool:
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise NotAPermutation(f"{list(perm)} is not a permutation of [1,{n}]")
    lo = hi = perm[0] if n else 0
    for p in perm[1:]:
        if p == lo - 1:
            lo = p
        elif p == hi + 1:
            hi = p
        else:
            return False
    return True


def xi_enumerate(n: int) -> Iterator[PiElement]:
    """All ``2^{n-1}`` interval permutations of ``[1, n]`` in lexicographic order."""
    if n < 1:
        return
    out = []

    def grow(prefix: list[int], lo: int, hi: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        if lo > 1:
            grow(prefix + [lo - 1], lo - 1, hi)
        if hi < n:
            grow(prefix + [hi + 1], lo, hi + 1)

    for start in range(1, n + 1):
        grow([start], start, start)
    for perm in sorted(out):
        yield PiElement(perm)


def identity_pi(n: int) -> PiElement:
    return PiElement(tuple(range(1, n + 1)))


def reversal_pi(n: int) -> PiElement:
    return PiElement(tuple(range(n, 0, -1)))


def _interval_word(word: Sequence[int], c: int, d: int) -> tuple[int, ...]:
    return tuple(word[c - 1:d])


def u_sequence(cartan: CartanData, word: Sequence[int], u: WeylElement,
               pi: PiElement) -> dict[int, WeylElement]:
    """``{k: u(k)}`` for ``k = N, ..., 0`` (``u(0) = e``).

    Computed by the Bruhat-minimum rule and, independently, by positive-subexpression
    membership on the interval words; the two must agree.
    """
    n = len(word)
    if pi.n != n:
        raise NotAPermutation("permutation size differs from word length")
    if not bruhat_leq(u, from_word(cartan, word)):
        raise NotBelow(f"{u!r} is not below {list(word)}")
    seq = {n: u}
    for k in range(n - 1, -1, -1):
        prev = seq[k + 1]
        c, d = pi.c(k + 1), pi.d(k + 1)
        iword = _interval_word(word, c, d)
        if pi.takes_right_end(k + 1):
            i = word[d - 1]
            route1 = multiply_by_simple(prev, i) if prev.has_right_descent(i) else prev
            in_set = len(iword) in rp(cartan, iword, prev)
            route2 = multiply_by_simple(prev, i) if in_set else prev
        else:
            i = word[c - 1]
            route1 = left_multiply_by_simple(prev, i) if prev.has_left_descent(i) else prev
            in_set = 1 in lp(cartan, iword, prev)
            route2 = left_multiply_by_simple(prev, i) if in_set else prev
        if route1 != route2:
            raise InternalError(f"u({k}) disagrees between the two recursions")
        seq[k] = route1
    if not seq[0].is_identity:
        raise InternalError("u-sequence does not terminate at the identity")
    return seq


def d_pi(cartan: CartanData, word: Sequence[int], u: WeylElement, pi: PiElement,
         useq: dict[int, WeylElement] | None = None) -> frozenset[int]:
    """The subset ``D(pi)`` of word positions."""
    if useq is None:
        useq = u_sequence(cartan, word, u, pi)
    D = set()
    for k in range(1, len(word) + 1):
        c, d = pi.c(k), pi.d(k)
        iword = _interval_word(word, c, d)
        p = pi.perm[k - 1]
        if p == d and len(iword) in rp(cartan, iword, useq[k]):
            D.add(d)
        if p == c and 1 in lp(cartan, iword, useq[k]):
            D.add(c)
    D = frozenset(D)
    for k in range(1, len(word) + 1):
        c, d = pi.c(k), pi.d(k)
        if product_over(cartan, word, D, c, d) != useq[k]:
            raise InternalError(f"u({k}) is not the D(pi)-product over [{c},{d}]")
    return D


def lambda_pm(cartan: CartanData, word: Sequence[int], u: WeylElement, pi: PiElement, k: int,
              useq: dict[int, WeylElement] | None = None,
              D: frozenset[int] | None = None) -> tuple[Weight, RootVec]:
    """``(lambda^+_{pi,k}, lambda^-_{pi,k})``: the first in weight coordinates,
    the second in simple-root coordinates.
    """
    if useq is None:
        useq = u_sequence(cartan, word, u, pi)
    if D is None:
        D = d_pi(cartan, word, u, pi, useq)
    c, d = pi.c(k), pi.d(k)
    uk = useq[k]
    if pi.takes_right_end(k):
        mu = cartan.fundamental_weight(word[d - 1])
    else:
        mu = inverse(uk).apply_to_weight(cartan.fundamental_weight(word[c - 1]))
    iword = _interval_word(word, c, d)
    local = {x - c + 1 for x in D if c <= x <= d}
    coeffs = deg2_decomposition(cartan, iword, local, len(iword), mu)
    betas = word_roots(cartan, word[:d])
    minus = combine_roots(cartan, betas, {j + c - 1: v for j, v in coeffs.items()})
    top = act_word_on_weight(cartan, word[:d], mu)
    plus = tuple(2 * a - b for a, b in zip(top, cartan.root_to_weight_coords(minus)))
    direct = tuple(a + b for a, b in zip(top, act_word_on_weight(cartan, word[:c - 1],
                                                                 uk.apply_to_weight(mu))))
    if plus != direct:
        raise InternalError(f"lambda^+ routes disagree at k = {k}")
    return plus, minus


@dataclass(frozen=True)
class ToricFrame:
    """Generators are word positions outside ``D(pi)``; ``bichar[a][b]`` is the
    s-exponent of ``Lambda(e_a, e_b)`` for generator positions ``a``, ``b``.
    """

    word: tuple[int, ...]
    u_word: tuple[int, ...]
    pi: tuple[int, ...]
    D: frozenset[int]
    generators: tuple[int, ...]
    labels: dict[int, dict]
    lambda_plus: dict[int, Weight]
    lambda_minus: dict[int, RootVec]
    bichar: dict[int, dict[int, int]]
    u_seq: dict[int, tuple[int, ...]]

    def matrix(self) -> list[list[int]]:
        g = self.generators
        return [[self.bichar[a][b] for b in g] for a in g]

    def to_json(self) -> dict:
        return {
            "word": list(self.word), "u": list(self.u_word), "pi": list(self.pi),
            "D_pi": sorted(self.D), "generators": list(self.generators),
            "labels": {str(p): self.labels[p] for p in self.generators},
            "lambda_plus": {str(p): list(self.lambda_plus[p]) for p in self.generators},
            "lambda_minus": {str(p): list(self.lambda_minus[p]) for p in self.generators},
            "bicharacter": self.matrix(),
            "u_sequence": {str(k): list(v) for k, v in sorted(self.u_seq.items())},
        }


def frame_bicharacter(cartan: CartanData, word: Sequence[int], u: WeylElement,
                      pi: PiElement) -> ToricFrame:
    """Toric frame attached to ``pi``: ``Lambda(e_k, e_j) = s^{-<lambda^+_k, lambda^-_j>}``
    whenever the chain step of ``k`` comes after that of ``j``.
    """
    word = tuple(word)
    n = len(word)
    useq = u_sequence(cartan, word, u, pi)
    D = d_pi(cartan, word, u, pi, useq)
    gens = tuple(p for p in range(1, n + 1) if p not in D)
    plus, minus, labels = {}, {}, {}
    for p in gens:
        k = pi.step_of(p)
        lp_, lm_ = lambda_pm(cartan, word, u, pi, k, useq, D)
        plus[p], minus[p] = lp_, lm_
        c = pi.c(k)
        if pi.takes_right_end(k):
            weight = cartan.fundamental_weight(word[pi.d(k) - 1])
        else:
            weight = inverse(useq[k]).apply_to_weight(cartan.fundamental_weight(word[c - 1]))
        labels[p] = {"step": k, "prefix_length": c - 1, "interval": [c, pi.d(k)],
                     "u_k": list(useq[k].word), "weight": list(weight)}
    bichar = {a: {} for a in gens}
    for a in gens:
        for b in gens:
            ka, kb = pi.step_of(a), pi.step_of(b)
            if ka > kb:
                v = -cartan.form_weight_root(plus[a], minus[b])
                bichar[a][b] = v
                bichar[b][a] = -v
            elif ka == kb:
                bichar[a][b] = 0
    return ToricFrame(word, u.word, pi.perm, D, gens, labels, plus, minus, bichar,
                      {k: v.word for k, v in useq.items()})


def direct_frame_exponents(cartan: CartanData, word: Sequence[int], u: WeylElement) -> dict[int, dict[int, int]]:
    """Frame from the normal sequence: ``Lambda(e_k, e_j)`` has s-exponent equal to the
    quasi-commutation exponent of ``(j, k)``, for ``k > j`` outside ``RP``.
    """
    RP = rp(cartan, word, u)
    gens = [p for p in range(1, len(word) + 1) if p not in RP]
    out = {a: {a: 0} for a in gens}
    for j in gens:
        for k in gens:
            if k > j:
                v = quasi_comm_exponent_direct(cartan, word, u, j, k)
                out[k][j], out[j][k] = v, -v
    return out


def reverse_frame_exponents(cartan: CartanData, word: Sequence[int], u: WeylElement,
                            literal_sign: bool = False) -> dict[int, dict[int, int]]:
    """Frame from the reverse normal sequence, generators outside ``LP``:
    ``Lambda(e_l, e_k)`` for ``l > k`` has s-exponent ``e`` where
    ``Dt_l Dt_k = q^e Dt_k Dt_l``.  ``literal_sign`` uses ``+<X_k, Y_l>`` instead
    (the opposite sign), kept for comparison.
    """
    LP = lp(cartan, word, u)
    gens = [p for p in range(1, len(word) + 1) if p not in LP]
    out = {a: {a: 0} for a in gens}
    for k in gens:
        for l in gens:
            if l > k:
                if literal_sign:
                    v = reverse_pairing(cartan, word, u, k, l)
                else:
                    v = quasi_comm_exponent_reverse(cartan, word, u, k, l)
                out[l][k], out[k][l] = v, -v
    return out
