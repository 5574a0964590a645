"""Exhaustive verification sweeps over small Weyl groups and quantum matrices.

Each suite returns ``{"suite", "instances", "failures", "examples"}`` where
``examples`` lists at most a few failing instances for diagnosis.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import product as cartesian
from typing import Callable, Iterable, Sequence

from .cartan import CartanData, builtin_cartan
from .errors import NotBelow, QSchubertError, UnknownSuite
from .exponents import (a_fundamental_closed_form, a_inverse, a_lambda, a_matrix, b_matrix,
                        chain_identity_holds, deg2_decomposition, inner_prod_identity_check,
                        integer_inverse, is_unit_upper_triangular, mat_mul, quasi_comm_exponent_direct,
                        transpose)
from .qtorus import CommutationMatrix, transport_commutation
from .frames import (direct_frame_exponents, frame_bicharacter, identity_pi, reverse_frame_exponents,
                     reversal_pi, xi_enumerate)
from .subexpr import lp, lp_via_reversal, oracle_positive_subexpr, rp
from .twist import matrix_correspondence_check, reverse_exponents_agree, twist_indices
from .weyl import (bruhat_leq, bruhat_leq_subword, elements_below, elements_up_to_length, from_word,
                   is_reduced, iter_subsets, roots_of_word)

SUITES = ("subexpr-oracle", "deg-identities", "matrices", "frames", "twist", "qmatrix")

# (type, rank, length bound); None means the whole group
DEFAULT_TYPES: tuple[tuple[str, int, int | None], ...] = (
    ("A", 2, None), ("A", 3, 6), ("B", 2, 6), ("G", 2, 6))

MAX_EXAMPLES = 5


def _bound(limit: int | None, max_length: int) -> int:
    return max_length if limit is None else min(limit, max_length)


def sweep_words(max_length: int = 6, types=DEFAULT_TYPES) -> list[tuple[CartanData, tuple[int, ...]]]:
    """One reduced word for every ``w`` in the configured groups and length bounds."""
    out = []
    for letter, rank, limit in types:
        cartan = builtin_cartan(letter, rank)
        bound = 10 ** 6 if limit is None else _bound(limit, max_length)
        for w in elements_up_to_length(cartan, bound):
            out.append((cartan, w.word))
    return out


def sweep_pairs(max_length: int = 6, types=DEFAULT_TYPES):
    for cartan, word in sweep_words(max_length, types):
        w = from_word(cartan, word)
        for u in elements_below(w):
            yield cartan, word, u


class _Tally:
    def __init__(self, suite: str):
        self.suite = suite
        self.instances = 0
        self.failures = 0
        self.examples: list[dict] = []

    def record(self, ok: bool, **info) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(info)

    def merge(self, other: "_Tally") -> None:
        self.instances += other.instances
        self.failures += other.failures
        self.examples.extend(other.examples[:MAX_EXAMPLES - len(self.examples)])

    def report(self) -> dict:
        return {"suite": self.suite, "instances": self.instances, "failures": self.failures,
                "examples": self.examples}


def _label(cartan: CartanData, word, u=None) -> dict:
    d = {"type": cartan.label, "word": list(word)}
    if u is not None:
        d["u"] = list(u.word)
    return d


# -- individual instance checks (module level so they can run in worker processes) --

def _subexpr_one(args) -> _Tally:
    cartan, word = args
    t = _Tally("subexpr-oracle")
    w = from_word(cartan, word)
    group = elements_up_to_length(cartan, len(word))
    for u in group:
        below = bruhat_leq(u, w)
        ok = below == bruhat_leq_subword(u, w)
        if below:
            try:
                R = rp(cartan, word, u)
                L = lp(cartan, word, u)
                ok = ok and R == oracle_positive_subexpr(cartan, word, u, "right")
                ok = ok and L == oracle_positive_subexpr(cartan, word, u, "left")
                ok = ok and L == lp_via_reversal(cartan, word, u)
            except QSchubertError:
                ok = False
        else:
            for fn in (lambda: rp(cartan, word, u), lambda: oracle_positive_subexpr(cartan, word, u, "right")):
                try:
                    fn()
                    ok = False
                except NotBelow:
                    pass
        t.record(ok, **_label(cartan, word, u))
    return t


def _weights(cartan: CartanData) -> list[tuple[int, ...]]:
    r = cartan.rank
    return [cartan.fundamental_weight(i) for i in range(1, r + 1)] + [(1,) * r]


def _deg_one(args) -> _Tally:
    cartan, word = args
    t = _Tally("deg-identities")
    n = len(word)
    for S in iter_subsets(n):
        for k in range(1, n + 1):
            for lam in _weights(cartan):
                try:
                    deg2_decomposition(cartan, word, S, k, lam, verify=True)
                    ok = True
                except QSchubertError:
                    ok = False
                for l in range(1, k + 1):
                    if l in S:
                        continue
                    lhs, rhs = inner_prod_identity_check(cartan, word, S, l, k, lam)
                    ok = ok and lhs == rhs
                t.record(ok, **_label(cartan, word), S=sorted(S), k=k, weight=list(lam))
    return t


def transport_holds(cartan: CartanData, word: Sequence[int], u) -> bool:
    """``A^T Omega_Y A = Omega_Delta`` for the exponent matrix restricted to generators outside RP.

    ``Omega_Y[j][l] = -<beta_j, beta_l>`` (``j > l``) and ``Omega_Delta[k][j]`` is the
    quasi-commutation exponent of the normal sequence, both skew.
    """
    n = len(word)
    R = rp(cartan, word, u)
    gens = [k for k in range(1, n + 1) if k not in R]
    if not gens:
        return True
    betas = roots_of_word(cartan, word)
    omega_y = [[0] * len(gens) for _ in gens]
    for x, j in enumerate(gens):
        for y, l in enumerate(gens):
            if j > l:
                v = -cartan.form_root_root(betas[j - 1], betas[l - 1])
                omega_y[x][y], omega_y[y][x] = v, -v
    A = a_matrix(cartan, word, u)
    amat = [[A.entry(j, k) for k in gens] for j in gens]
    got = mat_mul(mat_mul(transpose(amat), omega_y), amat)
    want = [[0] * len(gens) for _ in gens]
    for x, j in enumerate(gens):
        for y, k in enumerate(gens):
            if k > j:
                v = quasi_comm_exponent_direct(cartan, word, u, j, k)
                want[y][x], want[x][y] = v, -v
    return got == want


def _matrices_one(args) -> _Tally:
    cartan, word = args
    t = _Tally("matrices")
    n = len(word)
    for u in elements_below(from_word(cartan, word)):
        try:
            A = a_matrix(cartan, word, u)
            ok = is_unit_upper_triangular(A.principal())
            inv = a_inverse(cartan, word, u)
            size = len(A.rows)
            ok = ok and mat_mul(A.principal(), inv) == [[int(i == j) for j in range(size)] for i in range(size)]
            S = rp(cartan, word, u)
            for j in A.rows:
                for k in range(1, n + 1):
                    if j > k:
                        continue
                    ok = ok and a_fundamental_closed_form(cartan, word, S, j, k, word[k - 1]) == A.entry(j, k)
                    ok = ok and chain_identity_holds(cartan, word, S, j, k, word[k - 1])
            B = b_matrix(cartan, word, u)
            ok = ok and integer_inverse(B.principal()) is not None
            ok = ok and transport_holds(cartan, word, u)
        except QSchubertError:
            ok = False
        t.record(ok, **_label(cartan, word, u))
    return t


def _twist_one(args) -> _Tally:
    cartan, word = args
    t = _Tally("twist")
    for u in elements_below(from_word(cartan, word)):
        try:
            ok = (twist_indices(cartan, word, u).consistent()
                  and matrix_correspondence_check(cartan, word, u)
                  and reverse_exponents_agree(cartan, word, u))
        except QSchubertError:
            ok = False
        t.record(ok, **_label(cartan, word, u))
    return t


def transported_frame(cartan: CartanData, word: Sequence[int], gens: Sequence[int],
                      exps: dict[int, dict[int, int]]) -> list[list[int]]:
    """s-exponent commutation of the monomials ``prod_j Y_j^{exps[k][j]}`` (``k`` in ``gens``)
    obtained by transporting the root-vector torus.
    """
    betas = roots_of_word(cartan, word)
    lower = {(x, y): -2 * cartan.form_root_root(betas[gens[x] - 1], betas[gens[y] - 1])
             for x in range(len(gens)) for y in range(x)}
    torus = CommutationMatrix.from_lower(len(gens), lower)
    M = [[exps[k].get(j, 0) for k in gens] for j in gens]
    return [list(r) for r in transport_commutation(torus, M).skew]


def _frame_prefix_data(fr, pi, k: int) -> tuple:
    steps = set(pi.perm[:k])
    return ({j: fr.u_seq[j] for j in range(1, k + 1)}, frozenset(fr.D & steps),
            {p: fr.labels[p] for p in fr.generators if p in steps})


def frame_checks(cartan: CartanData, word: Sequence[int], u) -> dict[str, bool]:
    """Per-instance frame consistency over all of ``Xi_N``."""
    n = len(word)
    R, L = rp(cartan, word, u), lp(cartan, word, u)
    checks = {"d_identity": True, "d_reversal": True, "count": True, "skew": True,
              "identity_formula": True, "reversal_formula": True,
              "identity_transport": True, "reversal_transport": True, "prefix_consistency": True}
    seen: dict[tuple, tuple] = {}
    for pi in xi_enumerate(n):
        fr = frame_bicharacter(cartan, word, u, pi)
        for k in range(1, n + 1):
            key = pi.perm[:k]
            data = _frame_prefix_data(fr, pi, k)
            if seen.setdefault(key, data) != data:
                checks["prefix_consistency"] = False
        if len(fr.generators) != n - len(u):
            checks["count"] = False
        for a in fr.generators:
            for b in fr.generators:
                if not isinstance(fr.bichar[a][b], int) or fr.bichar[a][b] != -fr.bichar[b][a]:
                    checks["skew"] = False
        if pi == identity_pi(n):
            checks["d_identity"] = fr.D == R
            checks["identity_formula"] = fr.bichar == direct_frame_exponents(cartan, word, u)
            A = a_matrix(cartan, word, u)
            exps = {k: {j: A.entry(j, k) for j in A.rows} for k in fr.generators}
            checks["identity_transport"] = transported_frame(cartan, word, fr.generators, exps) == \
                [[2 * v for v in row] for row in fr.matrix()]
        if pi == reversal_pi(n):
            checks["d_reversal"] = fr.D == L
            checks["reversal_formula"] = fr.bichar == reverse_frame_exponents(cartan, word, u)
            B = b_matrix(cartan, word, u)
            exps = {k: {l: B.entry(l, k) for l in B.rows} for k in fr.generators}
            checks["reversal_transport"] = transported_frame(cartan, word, fr.generators, exps) == \
                [[2 * v for v in row] for row in fr.matrix()]
    return checks


def _frames_one(args) -> _Tally:
    cartan, word = args
    t = _Tally("frames")
    for u in elements_below(from_word(cartan, word)):
        try:
            checks = frame_checks(cartan, word, u)
            ok = all(checks.values())
            bad = sorted(k for k, v in checks.items() if not v)
        except QSchubertError as exc:
            ok, bad = False, [type(exc).__name__]
        t.record(ok, **_label(cartan, word, u), failed=bad)
    return t


def _qmatrix_suite(m: int, n: int, sample: int | None, seed: int) -> _Tally:
    from .qmatrix import (all_u, build_model, contraction_report, relations_hold, restoration,
                          verify_theorem_main, verify_theorem_main2, verify_vanishing)
    t = _Tally("qmatrix")
    model = build_model(m, n)
    t.record(not relations_hold(restoration(model, frozenset(), "direct")), check="relations_direct")
    t.record(not relations_hold(restoration(model, frozenset(), "reverse")), check="relations_reverse")
    us = all_u(model)
    if sample is not None and sample < len(us):
        us = random.Random(seed).sample(us, sample)
    for u in us:
        R = rp(model.cartan, model.word, u)
        L = lp(model.cartan, model.word, u)
        emb_r = restoration(model, R, "reverse")
        emb_d = restoration(model, L, "direct")
        for k in range(1, model.N + 1):
            for name, fn, emb in (("main", verify_theorem_main, emb_r), ("main2", verify_theorem_main2, emb_d)):
                try:
                    ok = fn(model, u, k, emb).equal
                except QSchubertError:
                    ok = False
                t.record(ok, check=name, u=list(u.word), k=k)
            t.record(contraction_report(model, u, k, emb_r)["ok"], check="contraction", u=list(u.word), k=k)
        t.record(verify_vanishing(model, u, emb_r)["ok"], check="vanishing", u=list(u.word))
    return t


_PER_WORD: dict[str, Callable] = {
    "subexpr-oracle": _subexpr_one,
    "deg-identities": _deg_one,
    "matrices": _matrices_one,
    "frames": _frames_one,
    "twist": _twist_one,
}


def _nonreduced_words(max_len: int = 4, types=DEFAULT_TYPES):
    for letter, rank, _ in types:
        cartan = builtin_cartan(letter, rank)
        for n in range(2, max_len + 1):
            for word in cartesian(range(1, rank + 1), repeat=n):
                if not is_reduced(cartan, word):
                    yield cartan, tuple(word)


def _run_map(fn, items: list, jobs: int) -> Iterable:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def run_suite(name: str, *, max_length: int = 6, jobs: int = 1, types=DEFAULT_TYPES,
              qmatrix_shape: tuple[int, int] = (2, 2), sample: int | None = None,
              seed: int = 0) -> dict:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    if name == "qmatrix":
        return _qmatrix_suite(*qmatrix_shape, sample, seed).report()
    items = sweep_words(max_length, types)
    if name == "deg-identities":
        items = items + list(_nonreduced_words(4, types))
    total = _Tally(name)
    for part in _run_map(_PER_WORD[name], items, jobs):
        total.merge(part)
    return total.report()


def verify_suites(names: Sequence[str], **bounds) -> dict:
    """Run the named suites in order; the report is deterministic for fixed bounds."""
    for name in names:
        if name not in SUITES:
            raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    reports = [run_suite(name, **bounds) for name in names]
    return {"suites": reports, "failures": sum(r["failures"] for r in reports),
            "instances": sum(r["instances"] for r in reports)}
