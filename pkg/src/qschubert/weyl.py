"""Weyl group elements as reduced words with faithful integer matrix actions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .cartan import CartanData, Matrix, RootVec, Weight
from .errors import IndexOutOfRange, InternalError, NotReduced, RankMismatch

Word = tuple[int, ...]


def _identity(r: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def _check_index(cartan: CartanData, i: int) -> None:
    if not 1 <= i <= cartan.rank:
        raise IndexOutOfRange(f"simple reflection index {i} outside [1,{cartan.rank}]")


def simple_reflect_root(cartan: CartanData, i: int, beta: Sequence[int]) -> RootVec:
    """``s_i beta = beta - <beta, alpha_i^vee> alpha_i`` in simple-root coordinates."""
    _check_index(cartan, i)
    if len(beta) != cartan.rank:
        raise RankMismatch("root vector length differs from rank")
    c = cartan.coroot_pairing_root(i, beta)
    out = list(beta)
    out[i - 1] -= c
    return tuple(out)


def simple_reflect_weight(cartan: CartanData, i: int, lam: Sequence[int]) -> Weight:
    """``s_i lam = lam - lam_i alpha_i`` in fundamental-weight coordinates."""
    _check_index(cartan, i)
    if len(lam) != cartan.rank:
        raise RankMismatch("weight length differs from rank")
    li = lam[i - 1]
    if li == 0:
        return tuple(lam)
    a = cartan.gcm
    return tuple(lam[j] - li * a[j][i - 1] for j in range(cartan.rank))


def act_word_on_weight(cartan: CartanData, word: Sequence[int], lam: Sequence[int]) -> Weight:
    """``s_{i_1} ... s_{i_N} lam`` for an arbitrary (possibly non-reduced) word."""
    out = tuple(lam)
    for i in reversed(word):
        out = simple_reflect_weight(cartan, i, out)
    return out


def act_word_on_root(cartan: CartanData, word: Sequence[int], beta: Sequence[int]) -> RootVec:
    out = tuple(beta)
    for i in reversed(word):
        out = simple_reflect_root(cartan, i, out)
    return out


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of the Weyl group.

    ``word`` is kept reduced.  ``root_action`` is the matrix of the element on
    the root lattice in simple-root coordinates, ``coroot_action`` the matrix on
    fundamental-weight coordinates.  Equality compares the two matrices.
    """

    cartan: CartanData
    word: Word
    root_action: Matrix
    coroot_action: Matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (self.cartan.gcm == other.cartan.gcm
                and self.root_action == other.root_action
                and self.coroot_action == other.coroot_action)

    def __hash__(self) -> int:
        return hash((self.root_action, self.coroot_action))

    def __repr__(self) -> str:
        return f"WeylElement({list(self.word)})"

    def __len__(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def apply_to_root(self, beta: Sequence[int]) -> RootVec:
        if len(beta) != self.cartan.rank:
            raise RankMismatch("root vector length differs from rank")
        m = self.root_action
        return tuple(sum(m[i][j] * beta[j] for j in range(len(beta))) for i in range(len(beta)))

    def apply_to_weight(self, lam: Sequence[int]) -> Weight:
        if len(lam) != self.cartan.rank:
            raise RankMismatch("weight length differs from rank")
        m = self.coroot_action
        return tuple(sum(m[i][j] * lam[j] for j in range(len(lam))) for i in range(len(lam)))

    def image_of_simple_root(self, i: int) -> RootVec:
        return tuple(row[i - 1] for row in self.root_action)

    def has_right_descent(self, i: int) -> bool:
        """``l(w s_i) < l(w)``, decided by the sign of ``w(alpha_i)``."""
        return all(c <= 0 for c in self.image_of_simple_root(i))

    def has_left_descent(self, i: int) -> bool:
        return inverse(self).has_right_descent(i)


def identity(cartan: CartanData) -> WeylElement:
    e = _identity(cartan.rank)
    return WeylElement(cartan, (), e, e)


def _times_simple(cartan: CartanData, root: Matrix, coroot: Matrix, i: int) -> tuple[Matrix, Matrix]:
    a = cartan.gcm
    r = cartan.rank
    k = i - 1
    new_root = []
    for row in root:
        # (M S_i)_{:,l} = M_{:,l} - a_il M_{:,i}
        mi = row[k]
        new_root.append(tuple(row[l] - a[k][l] * mi for l in range(r)))
    new_coroot = []
    for row in coroot:
        row = list(row)
        row[k] = row[k] - sum(a[j][k] * row[j] for j in range(r))
        new_coroot.append(tuple(row))
    return tuple(new_root), tuple(new_coroot)


def multiply_by_simple(w: WeylElement, i: int) -> WeylElement:
    """Return ``w s_i`` with its word re-reduced by the exchange condition."""
    cartan = w.cartan
    _check_index(cartan, i)
    root, coroot = _times_simple(cartan, w.root_action, w.coroot_action, i)
    if not w.has_right_descent(i):
        return WeylElement(cartan, w.word + (i,), root, coroot)
    v = cartan.simple_root(i)
    for j in range(len(w.word) - 1, -1, -1):
        if v == cartan.simple_root(w.word[j]):
            return WeylElement(cartan, w.word[:j] + w.word[j + 1:], root, coroot)
        v = simple_reflect_root(cartan, w.word[j], v)
    raise InternalError(f"exchange condition found no deletion for {w.word} * s_{i}")


def inverse(w: WeylElement) -> WeylElement:
    return from_word(w.cartan, tuple(reversed(w.word)))


def left_multiply_by_simple(w: WeylElement, i: int) -> WeylElement:
    """Return ``s_i w``."""
    return inverse(multiply_by_simple(inverse(w), i))


def from_word(cartan: CartanData, word: Iterable[int]) -> WeylElement:
    """Product of simple reflections; the word may be non-reduced."""
    w = identity(cartan)
    for i in word:
        w = multiply_by_simple(w, i)
    return w


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    out = x
    for i in y.word:
        out = multiply_by_simple(out, i)
    return out


def length(w: WeylElement) -> int:
    return len(w.word)


def is_reduced(cartan: CartanData, word: Sequence[int]) -> bool:
    return length(from_word(cartan, word)) == len(word)


def roots_of_word(cartan: CartanData, word: Sequence[int], *, check_reduced: bool = True) -> list[RootVec]:
    """``beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})``.

    With ``check_reduced`` a non-positive root signals a non-reduced word.
    """
    out = []
    prefix = identity(cartan)
    for k, i in enumerate(word):
        _check_index(cartan, i)
        beta = prefix.image_of_simple_root(i)
        if check_reduced and not all(c >= 0 for c in beta):
            raise NotReduced(f"word {list(word)} is not reduced at position {k + 1}")
        out.append(beta)
        # plain matrix product: the prefix may be non-reduced when unchecked
        root, coroot = _times_simple(cartan, prefix.root_action, prefix.coroot_action, i)
        prefix = WeylElement(cartan, prefix.word + (i,), root, coroot)
    return out


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison ``u <= w``.

    Peels the first letter of a reduced word of ``w``: for ``w = s_i v`` with
    ``l(w) > l(v)``, ``u <= w`` iff ``min(u, s_i u) <= v``.
    """
    if len(u) > len(w):
        return False
    for i in w.word:
        if u.has_left_descent(i):
            u = left_multiply_by_simple(u, i)
    return u.is_identity


def bruhat_leq_subword(u: WeylElement, w: WeylElement) -> bool:
    """Subword-property oracle: some subword of ``w.word`` is a reduced word of ``u``."""
    cartan = u.cartan
    ell = len(u)
    for positions in combinations(range(len(w.word)), ell):
        if from_word(cartan, (w.word[p] for p in positions)) == u:
            return True
    return False


def elements_up_to_length(cartan: CartanData, max_length: int) -> list[WeylElement]:
    """All elements with ``l(w) <= max_length``, ordered by length then word."""
    level = [identity(cartan)]
    seen = {level[0]}
    out = list(level)
    for _ in range(max_length):
        nxt = []
        for w in level:
            for i in range(1, cartan.rank + 1):
                if not w.has_right_descent(i):
                    x = multiply_by_simple(w, i)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
        if not nxt:
            break
        nxt.sort(key=lambda x: x.word)
        out.extend(nxt)
        level = nxt
    return out


def elements_below(w: WeylElement) -> list[WeylElement]:
    """Bruhat interval ``[e, w]``: products of all subwords, deduplicated."""
    cartan = w.cartan
    found: dict[WeylElement, None] = {}
    frontier = {identity(cartan)}
    # prefixes: every element below w_{<=k} s_{i_k} is x or x s_{i_k} with x below w_{<=k-1}
    for i in w.word:
        frontier = frontier | {multiply_by_simple(x, i) for x in frontier}
    for x in sorted(frontier, key=lambda x: (len(x), x.word)):
        found[x] = None
    return list(found)


def iter_subsets(n: int) -> Iterator[frozenset[int]]:
    """All subsets of ``[1, n]`` as frozensets of 1-based positions."""
    for mask in range(1 << n):
        yield frozenset(k + 1 for k in range(n) if mask >> k & 1)
