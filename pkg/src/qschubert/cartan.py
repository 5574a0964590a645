"""Generalized Cartan matrices and exact lattice pairings.

Convention: ``gcm[i][j] = <alpha_j, alpha_i^vee>`` (0-based in code).  Weights
are stored in fundamental-weight coordinates ``lam[j] = <lam, alpha_j^vee>``;
root-lattice vectors in simple-root coordinates.  Both are plain tuples of
Python ints, so all arithmetic is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import BadShape, NotSymmetrizable, RankMismatch, UnknownType

Weight = tuple[int, ...]
RootVec = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def _check_shape(gcm: Sequence[Sequence[int]]) -> Matrix:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in gcm)
    except (TypeError, ValueError) as exc:
        raise BadShape(f"not an integer matrix: {gcm!r}") from exc
    r = len(rows)
    if r == 0 or any(len(row) != r for row in rows):
        raise BadShape("Cartan matrix must be square and nonempty")
    for i in range(r):
        if rows[i][i] != 2:
            raise BadShape(f"diagonal entry ({i + 1},{i + 1}) is not 2")
        for j in range(r):
            if i != j:
                if rows[i][j] > 0:
                    raise BadShape(f"positive off-diagonal entry at ({i + 1},{j + 1})")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise BadShape(f"asymmetric zero pattern at ({i + 1},{j + 1})")
    return rows


def _components(gcm: Matrix) -> list[list[int]]:
    r = len(gcm)
    seen = [False] * r
    comps = []
    for start in range(r):
        if seen[start]:
            continue
        seen[start] = True
        comp, stack = [], [start]
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if j != i and gcm[i][j] != 0 and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def symmetrizer(gcm: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Minimal positive integer ``d`` with ``d_i a_ij = d_j a_ji``.

    The solution is propagated along each connected component of the Dynkin
    graph and then scaled to coprime integers.

    >>> symmetrizer([[2, -1], [-2, 2]])
    (2, 1)
    """
    a = _check_shape(gcm)
    r = len(a)
    d: list[Fraction | None] = [None] * r
    for comp in _components(a):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if j != i and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
        for i in comp:
            for j in comp:
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise NotSymmetrizable(f"no symmetrizer for {[list(r_) for r_ in a]}")
        scale = lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * scale) for i in comp]
        g = 0
        for x in ints:
            g = gcd(g, x)
        for i, x in zip(comp, ints):
            d[i] = Fraction(x // g)
    return tuple(int(x) for x in d)  # type: ignore[arg-type]


@dataclass(frozen=True)
class CartanData:
    """A symmetrizable generalized Cartan matrix with its minimal symmetrizer."""

    gcm: Matrix
    sym: tuple[int, ...] = field(default=())
    label: str = ""

    def __post_init__(self) -> None:
        a = _check_shape(self.gcm)
        object.__setattr__(self, "gcm", a)
        d = symmetrizer(a)
        if self.sym and tuple(self.sym) != d:
            raise NotSymmetrizable(f"given symmetrizer {self.sym} is not the minimal one {d}")
        object.__setattr__(self, "sym", d)

    @property
    def rank(self) -> int:
        return len(self.gcm)

    def _check(self, *vecs: Sequence[int]) -> None:
        for v in vecs:
            if len(v) != self.rank:
                raise RankMismatch(f"vector {tuple(v)} has length {len(v)}, rank is {self.rank}")

    def fundamental_weight(self, i: int) -> Weight:
        """``varpi_i`` for a 1-based index ``i``."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def simple_root(self, i: int) -> RootVec:
        """``alpha_i`` for a 1-based index ``i``."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def form_weight_root(self, lam: Sequence[int], beta: Sequence[int]) -> int:
        self._check(lam, beta)
        return sum(c * dj * lj for c, dj, lj in zip(beta, self.sym, lam))

    def form_root_root(self, beta: Sequence[int], gamma: Sequence[int]) -> int:
        self._check(beta, gamma)
        a, d = self.gcm, self.sym
        r = self.rank
        return sum(beta[i] * gamma[j] * d[i] * a[i][j] for i in range(r) if beta[i] for j in range(r))

    def root_to_weight_coords(self, beta: Sequence[int]) -> Weight:
        self._check(beta)
        a = self.gcm
        r = self.rank
        return tuple(sum(beta[i] * a[j][i] for i in range(r)) for j in range(r))

    def coroot_pairing_root(self, i: int, beta: Sequence[int]) -> int:
        """``<beta, alpha_i^vee>`` for 1-based ``i``."""
        row = self.gcm[i - 1]
        return sum(row[j] * beta[j] for j in range(self.rank))

    def to_json(self) -> dict:
        out = {"gcm": [list(r) for r in self.gcm], "d": list(self.sym)}
        if self.label:
            out["type"] = self.label
        return out


def _type_a(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def builtin_cartan(type_letter: str, rank: int) -> CartanData:
    """Finite-type Cartan matrix in Bourbaki numbering (B_n: last root short)."""
    t = str(type_letter).upper()
    n = int(rank)
    admissible = {"A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4,
                  "E": n in (6, 7, 8), "F": n == 4, "G": n == 2}
    if t not in admissible or not admissible[t]:
        raise UnknownType(f"no finite type {t}{n}")
    a = _type_a(n)
    if t == "B":
        a[n - 1][n - 2] = -2
    elif t == "C":
        a[n - 2][n - 1] = -2
    elif t == "D":
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif t == "E":
        # Bourbaki: chain 1-3-4-5-..., with 2 attached to 4
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 2)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif t == "F":
        a[2][1] = -2
    elif t == "G":
        a = [[2, -1], [-3, 2]]
    return CartanData(tuple(tuple(r) for r in a), label=f"{t}{n}")


def cartan_from_json(obj: dict | str) -> CartanData:
    """Parse ``{"type": "A", "rank": 2}`` or ``{"gcm": [[...], ...]}``."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise BadShape("Cartan JSON must be an object")
    if "gcm" in obj:
        return CartanData(obj["gcm"])
    if "type" in obj and "rank" in obj:
        return builtin_cartan(obj["type"], obj["rank"])
    raise BadShape('expected {"type":..,"rank":..} or {"gcm":[...]}')
