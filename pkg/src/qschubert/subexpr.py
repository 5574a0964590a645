"""Subexpressions of reduced words and right/left positive subexpressions.

Index sets are frozensets of 1-based word positions.
"""

from __future__ import annotations

from typing import Iterable, Literal, Sequence

from .cartan import CartanData
from .errors import IndexOutOfRange, NotBelow, UniquenessViolated
from .weyl import (WeylElement, from_word, identity, inverse, iter_subsets,
                   left_multiply_by_simple, multiply_by_simple)

IndexSet = frozenset
Side = Literal["right", "left"]

ORACLE_BOUND = 20


def product_over(cartan: CartanData, word: Sequence[int], D: Iterable[int], j: int, k: int) -> WeylElement:
    """``w^D_{[j,k]}``: product of ``s_{i_l}`` over ``l`` in ``D`` within ``[j, k]``, ascending."""
    n = len(word)
    if not (1 <= j <= n + 1 and 0 <= k <= n):
        raise IndexOutOfRange(f"range [{j},{k}] outside word of length {n}")
    chosen = sorted(l for l in D if j <= l <= k)
    return from_word(cartan, (word[l - 1] for l in chosen))


def rp(cartan: CartanData, word: Sequence[int], u: WeylElement) -> frozenset[int]:
    """Right positive subexpression of ``word`` with product ``u`` (greedy from the right)."""
    v = u
    D = []
    for k in range(len(word), 0, -1):
        i = word[k - 1]
        if v.has_right_descent(i):
            v = multiply_by_simple(v, i)
            D.append(k)
    if not v.is_identity:
        raise NotBelow(f"{u!r} is not below the element with word {list(word)}")
    return frozenset(D)


def lp(cartan: CartanData, word: Sequence[int], u: WeylElement) -> frozenset[int]:
    """Left positive subexpression (mirror greedy scan with left multiplication)."""
    v = u
    D = []
    for k in range(1, len(word) + 1):
        i = word[k - 1]
        if v.has_left_descent(i):
            v = left_multiply_by_simple(v, i)
            D.append(k)
    if not v.is_identity:
        raise NotBelow(f"{u!r} is not below the element with word {list(word)}")
    return frozenset(D)


def reverse_indices(D: Iterable[int], n: int) -> frozenset[int]:
    return frozenset(n + 1 - k for k in D)


def is_positive(cartan: CartanData, word: Sequence[int], D: Iterable[int], side: Side) -> bool:
    """Marsh-Rietsch positivity, checked at every position ``k``.

    Right: ``w^D_{<=k-1} < w^D_{<=k-1} s_{i_k}``.
    Left: ``w^D_{>=k+1} < s_{i_k} w^D_{>=k+1}``.
    """
    D = set(D)
    n = len(word)
    if side == "right":
        v = identity(cartan)
        for k in range(1, n + 1):
            i = word[k - 1]
            if v.has_right_descent(i):
                return False
            if k in D:
                v = multiply_by_simple(v, i)
        return True
    if side == "left":
        v = identity(cartan)
        for k in range(n, 0, -1):
            i = word[k - 1]
            if v.has_left_descent(i):
                return False
            if k in D:
                v = left_multiply_by_simple(v, i)
        return True
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def oracle_positive_subexpr(cartan: CartanData, word: Sequence[int], u: WeylElement,
                            side: Side, bound: int = ORACLE_BOUND) -> frozenset[int]:
    """Exhaustive search over all ``2^N`` subsets of the positions."""
    if len(word) > bound:
        raise IndexOutOfRange(f"word length {len(word)} exceeds oracle bound {bound}")
    survivors = [D for D in iter_subsets(len(word))
                 if product_over(cartan, word, D, 1, len(word)) == u
                 and is_positive(cartan, word, D, side)]
    if not survivors:
        raise NotBelow(f"no {side} positive subexpression of {list(word)} with product {u!r}")
    if len(survivors) > 1:
        raise UniquenessViolated(f"{len(survivors)} {side} positive subexpressions for {u!r}")
    return survivors[0]


def lp_via_reversal(cartan: CartanData, word: Sequence[int], u: WeylElement) -> frozenset[int]:
    """``lp`` computed as the index reversal of ``rp(reversed word, u^{-1})``."""
    return reverse_indices(rp(cartan, tuple(reversed(word)), inverse(u)), len(word))


def prefix_products(cartan: CartanData, word: Sequence[int], D: Iterable[int]) -> list[WeylElement]:
    """``[w^D_{<=0}, w^D_{<=1}, ..., w^D_{<=N}]``."""
    D = set(D)
    out = [identity(cartan)]
    for k in range(1, len(word) + 1):
        out.append(multiply_by_simple(out[-1], word[k - 1]) if k in D else out[-1])
    return out


def suffix_products(cartan: CartanData, word: Sequence[int], D: Iterable[int]) -> list[WeylElement]:
    """``out[k] = w^D_{>=k}`` for ``k`` in ``[1, N+1]`` (``out[0]`` unused, equal to ``out[1]``)."""
    D = set(D)
    n = len(word)
    out = [identity(cartan)] * (n + 2)
    for k in range(n, 0, -1):
        out[k] = left_multiply_by_simple(out[k + 1], word[k - 1]) if k in D else out[k + 1]
    out[0] = out[1]
    return out
