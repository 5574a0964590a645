"""Integer exponent matrices attached to a reduced word and ``u <= w``.

Every pairing computed here crosses a weight (fundamental-weight coordinates)
with a root-lattice vector, never two weights, so the formulas stay exact for
singular Cartan matrices too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .cartan import CartanData, RootVec, Weight
from .errors import IndexOutOfRange, InternalError, PreconditionViolated
from .scalars import scalar_coeff  # noqa: F401  (re-exported)
from .subexpr import lp, product_over, rp
from .weyl import (WeylElement, act_word_on_root, act_word_on_weight, from_word,
                   inverse, roots_of_word)

Side = Literal["direct", "reverse"]


def _vadd(x: Sequence[int], y: Sequence[int], c: int = 1) -> tuple[int, ...]:
    return tuple(a + c * b for a, b in zip(x, y))


def _letters(word: Sequence[int], S: Iterable[int], j: int, k: int) -> list[int]:
    """Letters of ``word`` at positions of ``S`` inside ``[j, k]``, ascending."""
    return [word[l - 1] for l in sorted(S) if j <= l <= k]


def _check_range(word: Sequence[int], j: int, k: int) -> None:
    if not (1 <= j <= k <= len(word)):
        raise IndexOutOfRange(f"need 1 <= {j} <= {k} <= {len(word)}")


def a_lambda(cartan: CartanData, word: Sequence[int], S: Iterable[int], j: int, k: int,
             lam: Sequence[int]) -> int:
    """``<alpha_{i_j}^vee, u_{[j+1,k]} lam>`` with ``u_{[j+1,k]}`` the product over ``S``.

    The word does not need to be reduced.
    """
    _check_range(word, j, k)
    image = act_word_on_weight(cartan, _letters(word, S, j + 1, k), lam)
    return image[word[j - 1] - 1]


def a_fundamental_closed_form(cartan: CartanData, word: Sequence[int], S: Iterable[int],
                              j: int, k: int, i: int) -> int:
    """Closed form of ``a_jk(varpi_i)``: a Kronecker delta minus a correction sum."""
    _check_range(word, j, k)
    S = set(S)
    ij = word[j - 1]
    total = 1 if ij == i else 0
    alpha = cartan.simple_root(i)
    for l in range(j + 1, k + 1):
        if word[l - 1] == i and l in S:
            root = act_word_on_root(cartan, _letters(word, S, j + 1, l - 1), alpha)
            total -= cartan.coroot_pairing_root(ij, root)
    return total


def chain_identity_holds(cartan: CartanData, word: Sequence[int], S: Iterable[int],
                         j: int, k: int, i: int) -> bool:
    """``u_{[j+1,k]} varpi_i = varpi_i - sum_{j<l<=k, i_l=i, l in S} u_{[j+1,l-1]}(alpha_i)``."""
    S = set(S)
    lhs = act_word_on_weight(cartan, _letters(word, S, j + 1, k), cartan.fundamental_weight(i))
    rhs = cartan.fundamental_weight(i)
    for l in range(j + 1, k + 1):
        if word[l - 1] == i and l in S:
            root = act_word_on_root(cartan, _letters(word, S, j + 1, l - 1), cartan.simple_root(i))
            rhs = _vadd(rhs, cartan.root_to_weight_coords(root), -1)
    return lhs == rhs


@dataclass(frozen=True)
class ExponentMatrix:
    """Rows ``[1,N]`` minus the support set, columns ``[1,N]``; 1-based keys."""

    word: tuple[int, ...]
    u_word: tuple[int, ...]
    side: Side
    support: frozenset[int]
    rows: tuple[int, ...]
    entries: dict[tuple[int, int], int] = field(compare=True)

    @property
    def n(self) -> int:
        return len(self.word)

    def entry(self, row: int, col: int) -> int:
        return self.entries[(row, col)]

    def as_lists(self) -> list[list[int]]:
        return [[self.entries[(r, c)] for c in range(1, self.n + 1)] for r in self.rows]

    def principal(self) -> list[list[int]]:
        return [[self.entries[(r, c)] for c in self.rows] for r in self.rows]

    def column(self, col: int) -> dict[int, int]:
        return {r: self.entries[(r, col)] for r in self.rows}

    def to_json(self) -> dict:
        return {"side": self.side, "word": list(self.word), "u": list(self.u_word),
                "set_used": sorted(self.support), "rows": list(self.rows),
                "columns": list(range(1, self.n + 1)), "entries": self.as_lists()}


def a_matrix(cartan: CartanData, word: Sequence[int], u: WeylElement) -> ExponentMatrix:
    """The ``a_jk`` matrix; rows outside ``RP``, ``a_jk = a_jk(varpi_{i_k})`` for ``j <= k``."""
    word = tuple(word)
    roots_of_word(cartan, word)
    RP = rp(cartan, word, u)
    n = len(word)
    rows = tuple(j for j in range(1, n + 1) if j not in RP)
    entries = {}
    for j in rows:
        for k in range(1, n + 1):
            if j > k:
                entries[(j, k)] = 0
                continue
            ik = word[k - 1]
            v = a_lambda(cartan, word, RP, j, k, cartan.fundamental_weight(ik))
            w2 = a_fundamental_closed_form(cartan, word, RP, j, k, ik)
            if v != w2:
                raise InternalError(f"a_{j}{k}: coroot form {v} != closed form {w2}")
            entries[(j, k)] = v
    return ExponentMatrix(word, u.word, "direct", RP, rows, entries)


def integer_inverse(m: list[list[int]]) -> list[list[int]]:
    """Exact inverse over the rationals, required to be integral."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise InternalError("singular exponent matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = [[x for x in row[n:]] for row in aug]
    if any(x.denominator != 1 for row in out for x in row):
        raise InternalError("inverse of exponent matrix is not integral")
    return [[int(x) for x in row] for row in out]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def transpose(a: list[list[int]]) -> list[list[int]]:
    return [list(r) for r in zip(*a)] if a else []


def is_unit_upper_triangular(m: list[list[int]]) -> bool:
    n = len(m)
    return all(m[i][i] == 1 for i in range(n)) and all(m[i][j] == 0 for i in range(n) for j in range(i))


def a_inverse(cartan: CartanData, word: Sequence[int], u: WeylElement) -> list[list[int]]:
    """Inverse of the principal square part of :func:`a_matrix`."""
    return integer_inverse(a_matrix(cartan, word, u).principal())


def lp_suffix(cartan: CartanData, word: Sequence[int], LP: Iterable[int], k: int, l: int) -> WeylElement:
    """``u-bar_{[k,l]}`` built from the left positive set."""
    return product_over(cartan, word, LP, k, l)


def b_l_lambda(cartan: CartanData, word: Sequence[int], u: WeylElement, l: int,
               lam: Sequence[int]) -> int:
    """``<alpha_{i_l}^vee, u-bar_{>=l} lam>`` with ``u-bar`` from ``LP``."""
    n = len(word)
    if not 1 <= l <= n:
        raise IndexOutOfRange(f"l = {l} outside [1,{n}]")
    LP = lp(cartan, word, u)
    image = act_word_on_weight(cartan, _letters(word, LP, l, n), lam)
    return image[word[l - 1] - 1]


def _b_entry_direct(cartan, word, LP, l, k) -> int:
    if l < k:
        return 0
    if l == k:
        return 1
    letters = _letters(word, LP, k, l - 1)[::-1]  # inverse of u-bar_{[k,l-1]}
    image = act_word_on_weight(cartan, letters, cartan.fundamental_weight(word[k - 1]))
    return image[word[l - 1] - 1]


def _b_entry_closed(cartan, word, LP, l, k) -> int:
    """Mirror closed form: delta minus a sum over ``n`` in ``LP`` with ``k <= n < l``."""
    ik, il = word[k - 1], word[l - 1]
    total = 1 if ik == il else 0
    for m in range(k, l):
        if word[m - 1] == ik and m in LP:
            letters = _letters(word, LP, m + 1, l - 1)[::-1]
            root = act_word_on_root(cartan, letters, cartan.simple_root(ik))
            total -= cartan.coroot_pairing_root(il, root)
    return total


def b_matrix(cartan: CartanData, word: Sequence[int], u: WeylElement) -> ExponentMatrix:
    """The ``b_lk`` matrix; rows outside ``LP``; lower unit triangular."""
    word = tuple(word)
    roots_of_word(cartan, word)
    LP = lp(cartan, word, u)
    n = len(word)
    rows = tuple(l for l in range(1, n + 1) if l not in LP)
    entries = {}
    for l in rows:
        for k in range(1, n + 1):
            v = _b_entry_direct(cartan, word, LP, l, k)
            if l > k:
                inv_suffix = inverse(product_over(cartan, word, LP, k, n))
                lam = inv_suffix.apply_to_weight(cartan.fundamental_weight(word[k - 1]))
                v2 = b_l_lambda(cartan, word, u, l, lam)
                v3 = _b_entry_closed(cartan, word, LP, l, k)
                if not v == v2 == v3:
                    raise InternalError(f"b_{l}{k}: routes disagree ({v}, {v2}, {v3})")
            entries[(l, k)] = v
    return ExponentMatrix(word, u.word, "reverse", LP, rows, entries)


def word_roots(cartan: CartanData, word: Sequence[int]) -> list[RootVec]:
    """``beta_1..beta_N`` for any word (no reducedness required)."""
    return roots_of_word(cartan, word, check_reduced=False)


def combine_roots(cartan: CartanData, betas: Sequence[RootVec], coeffs: dict[int, int]) -> RootVec:
    out = (0,) * cartan.rank
    for j, c in coeffs.items():
        out = _vadd(out, betas[j - 1], c)
    return out


def deg2_decomposition(cartan: CartanData, word: Sequence[int], S: Iterable[int], k: int,
                       lam: Sequence[int], *, verify: bool = True) -> dict[int, int]:
    """Coefficients ``c_j = -a_jk(lam)`` (``j <= k``, ``j`` outside ``S``) with
    ``(w_{<=k} - u_{<=k}) lam = sum_j c_j beta_j``.
    """
    n = len(word)
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"k = {k} outside [0,{n}]")
    S = set(S)
    coeffs = {j: -a_lambda(cartan, word, S, j, k, lam) for j in range(1, k + 1) if j not in S}
    if verify:
        lhs = _vadd(act_word_on_weight(cartan, word[:k], lam),
                    act_word_on_weight(cartan, _letters(word, S, 1, k), lam), -1)
        rhs = cartan.root_to_weight_coords(combine_roots(cartan, word_roots(cartan, word[:k]), coeffs))
        if lhs != rhs:
            raise InternalError(f"deg2 decomposition failed for {list(word)}, S={sorted(S)}, k={k}")
    return coeffs


def difference_root(cartan: CartanData, word: Sequence[int], S: Iterable[int], k: int,
                    lam: Sequence[int]) -> RootVec:
    """``(w_{<=k} - u_{<=k}) lam`` in simple-root coordinates."""
    coeffs = deg2_decomposition(cartan, word, S, k, lam)
    return combine_roots(cartan, word_roots(cartan, word[:k]), coeffs)


def inner_prod_identity_check(cartan: CartanData, word: Sequence[int], S: Iterable[int],
                              l: int, k: int, lam: Sequence[int]) -> tuple[int, int]:
    """Both sides of the inner-product identity for ``l`` outside ``S``, ``l <= k``."""
    S = set(S)
    if l in S:
        raise PreconditionViolated(f"l = {l} lies in S")
    _check_range(word, l, k)
    betas = word_roots(cartan, word[:k])
    bl = betas[l - 1]
    lhs = 0
    for j in range(1, k + 1):
        if j in S or j == l:
            continue
        term = cartan.form_root_root(betas[j - 1], bl) * a_lambda(cartan, word, S, j, k, lam)
        lhs += term if j < l else -term
    w_lam = act_word_on_weight(cartan, word[:k], lam)
    diff = difference_root(cartan, word, S, k, lam)
    rhs = 2 * cartan.form_weight_root(w_lam, bl) - cartan.form_root_root(diff, bl)
    return lhs, rhs


def rp_prefix(cartan: CartanData, word: Sequence[int], RP: Iterable[int], k: int) -> WeylElement:
    """``u-bar_{<=k}`` built from the right positive set."""
    return product_over(cartan, word, RP, 1, k)


def plus_weight(cartan: CartanData, word: Sequence[int], S: Iterable[int], k: int,
                lam: Sequence[int]) -> Weight:
    """``(w_{<=k} + u_{<=k}) lam`` in weight coordinates."""
    return _vadd(act_word_on_weight(cartan, word[:k], lam),
                 act_word_on_weight(cartan, _letters(word, S, 1, k), lam))


def quasi_comm_exponent_direct(cartan: CartanData, word: Sequence[int], u: WeylElement,
                               j: int, k: int) -> int:
    """Exponent ``m`` with ``Delta_k Delta_j = q^m Delta_j Delta_k`` for ``j < k``."""
    if not 1 <= j < k <= len(word):
        raise IndexOutOfRange(f"need 1 <= {j} < {k} <= {len(word)}")
    RP = rp(cartan, word, u)
    plus = plus_weight(cartan, word, RP, k, cartan.fundamental_weight(word[k - 1]))
    minus = difference_root(cartan, word, RP, j, cartan.fundamental_weight(word[j - 1]))
    return -cartan.form_weight_root(plus, minus)


def reverse_pairing(cartan: CartanData, word: Sequence[int], u: WeylElement, k: int, l: int) -> int:
    """``<(w^{-1}_{>=k} + u-bar^{-1}_{>=k}) varpi_{i_k}, (w^{-1}_{>=l} - u-bar^{-1}_{>=l}) varpi_{i_l}>``,
    evaluated directly from suffixes of ``word`` (``k < l``).
    """
    n = len(word)
    if not 1 <= k < l <= n:
        raise IndexOutOfRange(f"need 1 <= {k} < {l} <= {n}")
    LP = lp(cartan, word, u)
    rword = tuple(reversed(word))
    rLP = {n + 1 - x for x in LP}
    kk, ll = n + 1 - k, n + 1 - l
    plus = plus_weight(cartan, rword, rLP, kk, cartan.fundamental_weight(word[k - 1]))
    minus = difference_root(cartan, rword, rLP, ll, cartan.fundamental_weight(word[l - 1]))
    return cartan.form_weight_root(plus, minus)


def quasi_comm_exponent_reverse(cartan: CartanData, word: Sequence[int], u: WeylElement,
                                k: int, l: int) -> int:
    """Exponent ``e`` with ``Dt_l Dt_k = q^e Dt_k Dt_l`` (``k < l``) for the reverse
    normal sequence, obtained from the direct sequence of the reversed word and
    ``u^{-1}`` through the twist anti-isomorphism.  Equals ``-reverse_pairing``.
    """
    n = len(word)
    if not 1 <= k < l <= n:
        raise IndexOutOfRange(f"need 1 <= {k} < {l} <= {n}")
    rword = tuple(reversed(word))
    return quasi_comm_exponent_direct(cartan, rword, inverse(u), n + 1 - l, n + 1 - k)


def normal_comm_exponent(cartan: CartanData, word: Sequence[int], u: WeylElement, k: int,
                         gamma: Sequence[int], lam: Sequence[int] | None = None) -> int:
    """``-<(w_{<=k} + u-bar_{<=k}) lam, gamma>``, default ``lam = varpi_{i_k}``."""
    if not 1 <= k <= len(word):
        raise IndexOutOfRange(f"k = {k} outside [1,{len(word)}]")
    if lam is None:
        lam = cartan.fundamental_weight(word[k - 1])
    RP = rp(cartan, word, u)
    return -cartan.form_weight_root(plus_weight(cartan, word, RP, k, lam), gamma)


def normal_comm_exponent_split(cartan: CartanData, word: Sequence[int], u: WeylElement, k: int,
                               gamma: Sequence[int], lam: Sequence[int] | None = None) -> int:
    """Same value as :func:`normal_comm_exponent` via ``2 w lam - (w - u) lam``."""
    if lam is None:
        lam = cartan.fundamental_weight(word[k - 1])
    RP = rp(cartan, word, u)
    w_lam = act_word_on_weight(cartan, word[:k], lam)
    diff = difference_root(cartan, word, RP, k, lam)
    return -(2 * cartan.form_weight_root(w_lam, gamma) - cartan.form_root_root(diff, gamma))


def localized_minor_exponent(cartan: CartanData, word: Sequence[int], u: WeylElement,
                             lam1: Sequence[int], lam2: Sequence[int]) -> int:
    """``<(w - u) lam1, u lam2>`` with the first argument in root coordinates."""
    RP = rp(cartan, word, u)
    diff = difference_root(cartan, word, RP, len(word), lam1)
    return cartan.form_weight_root(u.apply_to_weight(lam2), diff)


def a_vector(cartan: CartanData, word: Sequence[int], S: Iterable[int], k: int,
             lam: Sequence[int]) -> dict[int, int]:
    """``{j: a_jk(lam)}`` over ``j <= k`` outside ``S``."""
    S = set(S)
    return {j: a_lambda(cartan, word, S, j, k, lam) for j in range(1, k + 1) if j not in S}


def proj_invariance_holds(cartan: CartanData, word: Sequence[int], u: WeylElement,
                          lam: Sequence[int]) -> bool | None:
    """If ``N`` lies in ``RP``, compare the exponent vector of ``(u, lam, word, N)`` with
    that of ``(u-bar_{<=N-1}, s_{i_N} lam, word_{<=N-1}, N-1)``.  ``None`` when not applicable.
    """
    n = len(word)
    RP = rp(cartan, word, u)
    if n not in RP or n == 0:
        return None
    shorter = tuple(word[:-1])
    u_short = rp_prefix(cartan, word, RP, n - 1)
    RP_short = rp(cartan, shorter, u_short)
    if RP_short != frozenset(x for x in RP if x < n):
        return False
    lam2 = act_word_on_weight(cartan, [word[-1]], lam)
    v1 = a_vector(cartan, word, RP, n, lam)
    v2 = a_vector(cartan, shorter, RP_short, n - 1, lam2) if n > 1 else {}
    return v1 == v2


def proj2_invariance_holds(cartan: CartanData, word: Sequence[int], u: WeylElement,
                           lam: Sequence[int]) -> bool | None:
    """Mirror statement: if ``1`` lies in ``LP``, compare ``b``-exponent vectors of
    ``(u, lam, word)`` at ``k = 1`` and of ``(u-bar_{>=2}, lam, word_{>=2})``.

    The extra letter sits on the left of ``u = s_{i_1} u-bar_{>=2}`` and is absorbed
    by the braid operator, so the weight is not reflected (unlike the right-end case).
    """
    n = len(word)
    LP = lp(cartan, word, u)
    if 1 not in LP:
        return None
    tail = tuple(word[1:])
    u_tail = product_over(cartan, word, LP, 2, n)
    if lp(cartan, tail, u_tail) != frozenset(x - 1 for x in LP if x > 1):
        return False
    def bvec(wd, LPset, lm):
        m = len(wd)
        return {l: act_word_on_weight(cartan, _letters(wd, LPset, l, m), lm)[wd[l - 1] - 1]
                for l in range(1, m + 1) if l not in LPset}

    v1 = {l - 1: v for l, v in bvec(word, LP, lam).items()}
    v2 = bvec(tail, frozenset(x - 1 for x in LP if x > 1), lam)
    return v1 == v2
