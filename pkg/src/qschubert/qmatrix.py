"""Quantum matrices as a quantum Schubert cell, with Cauchon's restoration.

``O_q(M_{m,n})`` is realized as ``U^-[w]`` in type ``A_{m+n-1}`` where ``w`` is
the Grassmannian permutation whose inversion roots are ``eps_a - eps_{m+c}``.
Generator ``k`` of the reduced word (root ``beta_k``) is the matrix entry
``t_{r,c}`` with ``beta_k = eps_{m+1-r} - eps_{m+c}``, listed row by row.

Restoration runs in the adjunction order of a presentation (``direct``:
positions ``1..N``; ``reverse``: ``N..1``).  Each step adjoins a pivot ``x_l``.
If ``l`` lies in the diagram the pivot maps to zero.  Otherwise it maps to a
fresh torus generator ``y_l``, and every earlier generator ``x_j`` becomes
``x_j - (1 - lambda_l)^{-1} lambda_{lj}^{-1} delta_l(x_j) y_l^{-1}``.  That is
the Cauchon series truncated after one term, because ``delta_l`` squares to
zero on generators here (this is checked, see :func:`restoration`).

The CGL generators are the root vectors ``x_k = F_{beta_k}``.  Matrix entries
are ``t = (q^{-1} - q) x``, the normalization under which one-box minors
``Delta_{varpi, s varpi}`` equal ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Literal, Sequence

from .cartan import CartanData, builtin_cartan
from .errors import (DictionaryMismatch, IndexOutOfRange, InternalError, NotBelow,
                     PivotNotMonomial, SizeMismatch)
from .exponents import a_matrix, b_matrix, quasi_comm_exponent_direct, quasi_comm_exponent_reverse
from .qtorus import CommutationMatrix, TorusElement, invert_monomial
from .scalars import ONE, ScalarQ, q_power, scalar_coeff
from .subexpr import lp, product_over, rp
from .weyl import (WeylElement, bruhat_leq, elements_below, from_word, identity, inverse,
                   roots_of_word)

Presentation = Literal["direct", "reverse"]

KAPPA = ScalarQ.laurent({-2: 1, 2: -1})  # q^{-1} - q
QQ_INV = ScalarQ.laurent({2: 1, -2: -1})  # q - q^{-1}


@dataclass(frozen=True)
class Relation:
    """``x_k x_j = q^{lam_exp} x_j x_k + coeff * x_a x_b`` for ``j < k`` (``coeff`` may be 0)."""

    lam_exp: int
    coeff: ScalarQ
    factors: tuple[int, ...]


@dataclass(frozen=True)
class QMatrixModel:
    m: int
    n: int
    cartan: CartanData
    word: tuple[int, ...]
    positions: tuple[tuple[int, int], ...]  # positions[k-1] = (row, col)
    relations: dict[tuple[int, int], Relation] = field(repr=False)

    @property
    def N(self) -> int:
        return len(self.word)

    @property
    def w(self) -> WeylElement:
        return from_word(self.cartan, self.word)

    def index_of(self, row: int, col: int) -> int:
        return self.positions.index((row, col)) + 1

    def torus(self) -> CommutationMatrix:
        """``Y_k Y_j = q^{-<beta_j, beta_k>} Y_j Y_k`` for ``k > j``, as s-exponents."""
        betas = roots_of_word(self.cartan, self.word)
        lower = {(k, j): -2 * self.cartan.form_root_root(betas[j], betas[k])
                 for k in range(self.N) for j in range(k)}
        return CommutationMatrix.from_lower(self.N, lower)


def _eps_diff(M: int, a: int, b: int) -> tuple[int, ...]:
    """``eps_a - eps_b`` (``a < b``) in simple-root coordinates of ``A_{M-1}``."""
    return tuple(1 if a <= i < b else 0 for i in range(1, M))


def build_model(m: int, n: int) -> QMatrixModel:
    """Fix the reduced word and position map, then validate the relation table."""
    if m < 1 or n < 1:
        raise IndexOutOfRange("matrix shape must be positive")
    M = m + n
    cartan = builtin_cartan("A", M - 1)
    positions = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    word: list[int] = []
    prefix = identity(cartan)
    for r, c in positions:
        target = _eps_diff(M, m + 1 - r, m + c)
        alpha = inverse(prefix).apply_to_root(target)
        if sorted(alpha) != [0] * (M - 2) + [1]:
            raise InternalError(f"position {(r, c)} is not reachable by a simple reflection")
        i = alpha.index(1) + 1
        word.append(i)
        prefix = from_word(cartan, word)
    betas = roots_of_word(cartan, word)
    rels = {}
    for k in range(len(positions)):
        for j in range(k):
            (r1, c1), (r2, c2) = positions[j], positions[k]
            pair = cartan.form_root_root(betas[j], betas[k])
            if r1 == r2 or c1 == c2:
                expected = 1
                coeff, factors = ScalarQ.const(0), ()
            elif c1 > c2:
                expected = 0
                coeff, factors = ScalarQ.const(0), ()
            else:
                expected = 0
                coeff = -QQ_INV
                factors = (positions.index((r1, c2)) + 1, positions.index((r2, c1)) + 1)
            if pair != expected:
                raise InternalError(f"<beta_{j + 1}, beta_{k + 1}> = {pair}, quantum matrices need {expected}")
            rels[(j + 1, k + 1)] = Relation(-pair, coeff, factors)
    return QMatrixModel(m, n, cartan, tuple(word), tuple(positions), rels)


@dataclass(frozen=True)
class TorusEmbedding:
    model: QMatrixModel
    presentation: Presentation
    diagram: frozenset[int]
    torus: CommutationMatrix
    images: dict[int, TorusElement]  # images of x_k = F_{beta_k}

    def t(self, row: int, col: int) -> TorusElement:
        """Image of the matrix entry ``t_{row,col} = (q^{-1}-q) x``."""
        return self.images[self.model.index_of(row, col)].scalar_mul(KAPPA)

    def generator(self, k: int) -> TorusElement:
        return self.torus.generator(k - 1)


def _eval_relation_term(rel: Relation, images: dict[int, TorusElement], tor: CommutationMatrix) -> TorusElement:
    if rel.coeff.is_zero():
        return tor.zero()
    out = tor.scalar(rel.coeff)
    for f in rel.factors:
        out = out * images[f]
    return out


def _delta(model: QMatrixModel, pivot: int, j: int) -> tuple[int, Relation]:
    """Skew derivation of the pivot on ``x_j`` in the active presentation:
    returns ``(lam_exp, rel)`` with ``x_pivot x_j = q^{lam_exp} x_j x_pivot + delta``.
    """
    if pivot > j:
        rel = model.relations[(j, pivot)]
        return rel.lam_exp, rel
    rel = model.relations[(pivot, j)]
    # x_j x_p = q^e x_p x_j + P  =>  x_p x_j = q^{-e} x_j x_p - q^{-e} P
    return -rel.lam_exp, Relation(-rel.lam_exp, -(q_power(-rel.lam_exp) * rel.coeff), rel.factors)


def restoration(model: QMatrixModel, D: Sequence[int] | frozenset[int],
                presentation: Presentation = "direct") -> TorusEmbedding:
    """Embed the quotient attached to the Cauchon diagram ``D`` into the quantum torus."""
    D = frozenset(D)
    N = model.N
    if any(not 1 <= x <= N for x in D):
        raise IndexOutOfRange(f"diagram {sorted(D)} outside [1,{N}]")
    tor = model.torus()
    order = list(range(1, N + 1)) if presentation == "direct" else list(range(N, 0, -1))
    betas = roots_of_word(model.cartan, model.word)
    images: dict[int, TorusElement] = {}
    done: list[int] = []
    for pivot in order:
        if pivot in D:
            images[pivot] = tor.zero()
            done.append(pivot)
            continue
        y = tor.generator(pivot - 1)
        if not y.is_monomial():
            raise PivotNotMonomial(f"pivot {pivot} is not a single torus generator")
        y_inv = invert_monomial(y)
        norm = model.cartan.form_root_root(betas[pivot - 1], betas[pivot - 1])
        pivot_eig = q_power(-norm if presentation == "direct" else norm)
        new = dict(images)
        for j in done:
            lam_exp, rel = _delta(model, pivot, j)
            if rel.coeff.is_zero():
                continue
            # delta must annihilate delta(x_j): its factors q-commute with the pivot
            for f in rel.factors:
                if not _delta(model, pivot, f)[1].coeff.is_zero():
                    raise InternalError("skew derivation is not nilpotent of order two")
            c = (ONE - pivot_eig).inverse() * q_power(-lam_exp)
            new[j] = images[j] - (_eval_relation_term(rel, images, tor) * y_inv).scalar_mul(c)
        new[pivot] = y
        images = new
        done.append(pivot)
    return TorusEmbedding(model, presentation, D, tor, images)


def relations_hold(emb: TorusEmbedding) -> list[tuple[int, int]]:
    """Pairs ``(j, k)`` whose defining relation fails on the images (empty when all hold)."""
    bad = []
    tor = emb.torus
    for (j, k), rel in emb.model.relations.items():
        xj, xk = emb.images[j], emb.images[k]
        lhs = xk * xj - (xj * xk).scalar_mul(q_power(rel.lam_exp))
        if lhs != _eval_relation_term(rel, emb.images, tor):
            bad.append((j, k))
    return bad


def _inversions(p: Sequence[int]) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def quantum_minor_image(emb: TorusEmbedding, rows: Sequence[int], cols: Sequence[int]) -> TorusElement:
    """``sum_sigma (-q)^{l(sigma)} t_{r_1 c_sigma(1)} ... t_{r_d c_sigma(d)}`` in the torus."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise SizeMismatch("quantum minor needs as many rows as columns")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise SizeMismatch("repeated row or column in quantum minor")
    m, n = emb.model.m, emb.model.n
    if any(not 1 <= r <= m for r in rows) or any(not 1 <= c <= n for c in cols):
        raise IndexOutOfRange("minor rows/cols outside the matrix")
    rows.sort()
    cols.sort()
    tor = emb.torus
    total = tor.zero()
    minus_q = ScalarQ.laurent({2: -1})
    for perm in permutations(range(len(cols))):
        term = tor.scalar(minus_q ** _inversions(perm))
        for r, p in zip(rows, perm):
            term = term * emb.t(r, cols[p])
            if term.is_zero():
                break
        total = total + term
    return total


def minor_subsets(model: QMatrixModel, x: WeylElement, y: WeylElement, d: int) -> tuple[list[int], list[int]] | None:
    """Matrix rows and columns realizing ``Delta_{x varpi_d, y varpi_d}``.

    The ambient minor has rows ``y[1,d]`` and columns ``x[1,d]`` in the block
    unipotent ``[[1, 0], [X, 1]]``; it reduces to a minor of ``X`` whose
    row/column sets are read off below.  ``None`` means the ambient minor
    vanishes identically.
    """
    M = model.m + model.n
    if not 1 <= d < M:
        raise IndexOutOfRange(f"d = {d} outside [1,{M - 1}]")
    I = set(_perm_image(x, M, d))
    J = set(_perm_image(y, M, d))
    m = model.m
    I1, I2 = {a for a in I if a <= m}, {a for a in I if a > m}
    J1, J2 = {a for a in J if a <= m}, {a for a in J if a > m}
    if not (I2 <= J2 and J1 <= I1):
        return None
    rows = sorted(m + 1 - a for a in I1 - J1)
    cols = sorted(b - m for b in J2 - I2)
    return rows, cols


def _perm_image(x: WeylElement, M: int, d: int) -> list[int]:
    """``x([1,d])`` for ``x`` in ``S_M`` acting on ``[1,M]`` (``s_i`` swaps ``i, i+1``)."""
    out = list(range(1, d + 1))
    for i in reversed(x.word):
        out = [i + 1 if v == i else (i if v == i + 1 else v) for v in out]
    return sorted(out)


def perm_image(x: WeylElement, M: int, d: int) -> list[int]:
    return _perm_image(x, M, d)


def minor_image(emb: TorusEmbedding, x: WeylElement, y: WeylElement, d: int) -> TorusElement:
    sub = minor_subsets(emb.model, x, y, d)
    if sub is None:
        return emb.torus.zero()
    rows, cols = sub
    if not rows:
        return emb.torus.one()
    return quantum_minor_image(emb, rows, cols)


@dataclass
class TheoremReport:
    theorem: str
    u: tuple[int, ...]
    k: int
    predicted: TorusElement
    computed: TorusElement
    rows: list[int]
    cols: list[int]

    @property
    def equal(self) -> bool:
        return self.predicted == self.computed

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "u": list(self.u), "k": self.k, "rows": self.rows,
                "cols": self.cols, "predicted": self.predicted.to_json(),
                "computed": self.computed.to_json(), "equal": self.equal}


def _check_below(model: QMatrixModel, u: WeylElement) -> None:
    if not bruhat_leq(u, model.w):
        raise NotBelow(f"{u!r} is not below the quantum-matrix element")


def _monomial_or_raise(x: TorusElement, what: str) -> None:
    if not x.is_monomial():
        raise DictionaryMismatch(f"{what}: image has {len(x.terms)} terms")


def verify_theorem_main(model: QMatrixModel, u: WeylElement, k: int,
                        emb: TorusEmbedding | None = None) -> TheoremReport:
    """``Delta_{u-bar_{<=k} varpi, w_{<=k} varpi}`` against the descending product of
    reverse-presentation generators with exponents ``a_jk``.
    """
    _check_below(model, u)
    cartan, word = model.cartan, model.word
    RP = rp(cartan, word, u)
    if emb is None:
        emb = restoration(model, RP, "reverse")
    A = a_matrix(cartan, word, u)
    d = cartan.sym[word[k - 1] - 1]
    tor = emb.torus
    predicted = tor.one()
    for j in sorted((j for j in A.rows if j <= k), reverse=True):
        a = A.entry(j, k)
        coeff = scalar_coeff(cartan.sym[word[j - 1] - 1], a)
        predicted = predicted * tor.ordered_monomial({j - 1: a}).scalar_mul(coeff)
    x = product_over(cartan, word, RP, 1, k)
    y = from_word(cartan, word[:k])
    sub = minor_subsets(model, x, y, word[k - 1]) or ([], [])
    computed = minor_image(emb, x, y, word[k - 1])
    if k not in RP:
        _monomial_or_raise(computed, f"main, k={k}")
    del d
    return TheoremReport("main", u.word, k, predicted, computed, *sub)


def verify_theorem_main2(model: QMatrixModel, u: WeylElement, k: int,
                         emb: TorusEmbedding | None = None) -> TheoremReport:
    """Shifted reverse minors against the descending product of direct-presentation
    generators with exponents ``b_lk``.
    """
    _check_below(model, u)
    cartan, word = model.cartan, model.word
    N = model.N
    LP = lp(cartan, word, u)
    if emb is None:
        emb = restoration(model, LP, "direct")
    B = b_matrix(cartan, word, u)
    tor = emb.torus
    predicted = tor.one()
    for l in sorted((l for l in B.rows if l >= k), reverse=True):
        b = B.entry(l, k)
        coeff = scalar_coeff(cartan.sym[word[l - 1] - 1], b)
        predicted = predicted * tor.ordered_monomial({l - 1: b}).scalar_mul(coeff)
    ubar_suffix = product_over(cartan, word, LP, k, N)
    prefix = from_word(cartan, word[:k - 1])
    x = prefix
    y = from_word(cartan, word + inverse(ubar_suffix).word)
    sub = minor_subsets(model, x, y, word[k - 1]) or ([], [])
    computed = minor_image(emb, x, y, word[k - 1])
    if k not in LP:
        _monomial_or_raise(computed, f"main2, k={k}")
    return TheoremReport("main2", u.word, k, predicted, computed, *sub)


def verify_vanishing(model: QMatrixModel, u: WeylElement,
                     emb: TorusEmbedding | None = None) -> dict:
    """Last-letter vanishing: ``Delta_{u-bar_{<=N-1} varpi_{i_N}, w varpi_{i_N}}`` maps to zero
    when ``N`` is in ``RP`` and to the image of ``Delta_{u varpi_{i_N}, w varpi_{i_N}}`` otherwise.
    """
    _check_below(model, u)
    cartan, word = model.cartan, model.word
    N = model.N
    RP = rp(cartan, word, u)
    if emb is None:
        emb = restoration(model, RP, "reverse")
    d = word[-1]
    w = model.w
    shorter = product_over(cartan, word, RP, 1, N - 1)
    lhs = minor_image(emb, shorter, w, d)
    if N in RP:
        ok = lhs.is_zero()
        case = "zero"
    else:
        ok = lhs == minor_image(emb, u, w, d) and not lhs.is_zero()
        case = "equal"
    return {"u": list(u.word), "case": case, "ok": ok}


def gale_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(sorted(a), sorted(b)))


def contraction_report(model: QMatrixModel, u: WeylElement, k: int,
                       emb: TorusEmbedding | None = None) -> dict:
    """Consistency of the embedding restricted to ``U^-[w_{<=k}]`` with the data of
    ``(w_{<=k}, u-bar_{<=k})``.
    """
    _check_below(model, u)
    cartan, word = model.cartan, model.word
    if not 1 <= k <= model.N:
        raise IndexOutOfRange(f"k = {k} outside [1,{model.N}]")
    RP = rp(cartan, word, u)
    if emb is None:
        emb = restoration(model, RP, "reverse")
    wk = from_word(cartan, word[:k])
    uk = product_over(cartan, word, RP, 1, k)
    RPk = rp(cartan, word[:k], uk)
    checks = {"rp_restricts": RPk == frozenset(x for x in RP if x <= k)}
    # normal elements of the truncated chain are nonzero; last-letter vanishing at every j <= k
    nonzero_ok = vanish_ok = True
    for j in range(1, k + 1):
        d = word[j - 1]
        wj = from_word(cartan, word[:j])
        if minor_image(emb, product_over(cartan, word, RP, 1, j), wj, d).is_zero():
            nonzero_ok = False
        lower = minor_image(emb, product_over(cartan, word, RP, 1, j - 1), wj, d)
        if lower.is_zero() != (j in RP):
            vanish_ok = False
    checks["normal_elements_nonzero"] = nonzero_ok
    checks["last_letter_vanishing"] = vanish_ok
    # type-A membership: Delta_{S, w_{<=k} varpi_d} with S outside the Gale interval
    # [u_k[1,d], w_k[1,d]] must vanish.  The converse fails (positroid-type vanishing).
    M = model.m + model.n
    gale_ok = True
    for d in range(1, M):
        top = _perm_image(wk, M, d)
        low = _perm_image(uk, M, d)
        for S in combinations(range(1, M + 1), d):
            if not gale_leq(S, top):
                continue
            img = _subset_minor_image(emb, list(S), top)
            if not gale_leq(low, S) and not img.is_zero():
                gale_ok = False
    checks["gale_membership"] = gale_ok
    return {"u": list(u.word), "k": k, "u_k": list(uk.word), "checks": checks,
            "ok": all(checks.values())}


def _subset_minor_image(emb: TorusEmbedding, I: list[int], J: list[int]) -> TorusElement:
    m = emb.model.m
    I_, J_ = set(I), set(J)
    I1, I2 = {a for a in I_ if a <= m}, {a for a in I_ if a > m}
    J1, J2 = {a for a in J_ if a <= m}, {a for a in J_ if a > m}
    if not (I2 <= J2 and J1 <= I1):
        return emb.torus.zero()
    rows = sorted(m + 1 - a for a in I1 - J1)
    cols = sorted(b - m for b in J2 - I2)
    if not rows:
        return emb.torus.one()
    return quantum_minor_image(emb, rows, cols)


def normal_sequence_commutation(model: QMatrixModel, u: WeylElement) -> dict:
    """Compare torus commutation of the normal-sequence images with the predicted exponents.

    ``direct``: ``Delta_k Delta_j = q^m Delta_j Delta_k``.  ``reverse``: ``Dt_l Dt_k = q^e Dt_k Dt_l``;
    ``reverse_literal`` records how many pairs would satisfy the opposite sign.
    """
    cartan, word = model.cartan, model.word
    N = model.N
    RP, LP = rp(cartan, word, u), lp(cartan, word, u)
    emb_r = restoration(model, RP, "reverse")
    emb_d = restoration(model, LP, "direct")
    delta = {k: verify_theorem_main(model, u, k, emb_r).computed for k in range(1, N + 1) if k not in RP}
    tilde = {k: verify_theorem_main2(model, u, k, emb_d).computed for k in range(1, N + 1) if k not in LP}
    out = {"direct_ok": 0, "direct_bad": 0, "reverse_ok": 0, "reverse_bad": 0, "reverse_literal_ok": 0}
    for j in delta:
        for k in delta:
            if j < k:
                m_ = quasi_comm_exponent_direct(cartan, word, u, j, k)
                same = delta[k] * delta[j] == (delta[j] * delta[k]).scalar_mul(q_power(m_))
                out["direct_ok" if same else "direct_bad"] += 1
    for k in tilde:
        for l in tilde:
            if k < l:
                e = quasi_comm_exponent_reverse(cartan, word, u, k, l)
                lhs = tilde[l] * tilde[k]
                same = lhs == (tilde[k] * tilde[l]).scalar_mul(q_power(e))
                out["reverse_ok" if same else "reverse_bad"] += 1
                if lhs == (tilde[k] * tilde[l]).scalar_mul(q_power(-e)):
                    out["reverse_literal_ok"] += 1
    return out


def all_u(model: QMatrixModel) -> list[WeylElement]:
    return elements_below(model.w)
