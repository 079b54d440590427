"""Linear codes over GF(q) as generator matrices.

Everything here works on numpy int64 arrays of packed field values.  Prime
fields use direct mod-p arithmetic; extension fields go through the dense
field tables.  Generator matrices are kept in reduced row echelon form, so
row-space equality is plain array equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Optional, Sequence

import numpy as np

from . import gf
from .enumeration import DEFAULT_BUDGET, sampled_min_weight, weight_distribution
from .errors import BudgetExceeded, LengthMismatch, NotSquare


# ---------------------------------------------------------------------------
# raw matrix helpers

def matmul(field: gf.FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if field.s == 1:
        return (A @ B) % field.p
    add, mul, _, _ = field.tables()
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = add[out, mul[A[:, t][:, None], B[t, :][None, :]]]
    return out


def rref(field: gf.FieldSpec, A: np.ndarray) -> tuple:
    """(R, pivots): reduced row echelon form over the field."""
    A = np.asarray(A, dtype=np.int64).copy()
    m, n = A.shape
    if field.s == 1:
        p = field.p
        r = 0
        pivots = []
        for c in range(n):
            if r == m:
                break
            rows = np.nonzero(A[r:, c])[0]
            if len(rows) == 0:
                continue
            i = rows[0] + r
            if i != r:
                A[[r, i]] = A[[i, r]]
            A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
            others = np.nonzero(A[:, c])[0]
            others = others[others != r]
            if len(others):
                A[others] = (A[others] - A[others, c][:, None] * A[r][None, :]) % p
            pivots.append(c)
            r += 1
        return A, pivots
    add, mul, neg, inv = field.tables()
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        rows = np.nonzero(A[r:, c])[0]
        if len(rows) == 0:
            continue
        i = rows[0] + r
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = mul[A[r], inv[A[r, c]]]
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if len(others):
            elim = mul[A[others, c][:, None], A[r][None, :]]
            A[others] = add[A[others], neg[elim]]
        pivots.append(c)
        r += 1
    return A, pivots


def nullspace(field: gf.FieldSpec, A: np.ndarray) -> np.ndarray:
    """Basis (rows) of {x : A x^T = 0}, in RREF."""
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    R, pivots = rref(field, A)
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return np.zeros((0, n), dtype=np.int64)
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, c in enumerate(pivots):
            basis[row, c] = field.neg(int(R[i, f]))
    R2, _ = rref(field, basis)
    return R2


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Distance:
    """Minimum-distance report: exact value, or a (lower, upper) interval."""

    lower: int
    upper: int
    exact: bool
    enumerated: int

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def to_json(self) -> dict:
        if self.exact:
            return {"exact": self.lower, "enumerated": self.enumerated}
        return {"interval": [self.lower, self.upper], "enumerated": self.enumerated}


@dataclass(frozen=True)
class GriesmerResult:
    bound_sum: int
    status: str  # attains | slack | violates
    slack: int

    def to_json(self) -> dict:
        return {"bound_sum": self.bound_sum, "status": self.status, "slack": self.slack}


class GeneratorMatrix:
    """Full-row-rank k x n matrix over GF(q), canonicalized to RREF.

    Feeding in a spanning set is fine: dependent rows are reduced away and
    the rank becomes k.
    """

    __slots__ = ("field", "rows", "n", "k")

    def __init__(self, field: gf.FieldSpec, rows, n: Optional[int] = None):
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            if n is None:
                n = rows.shape[1] if rows.ndim == 2 else 0
            rows = np.zeros((0, n), dtype=np.int64)
        if rows.ndim != 2:
            raise ValueError("rows must be 2-dimensional")
        R, pivots = rref(field, rows)
        self.field = field
        self.rows = R[: len(pivots)].copy()
        self.rows.setflags(write=False)
        self.n = rows.shape[1]
        self.k = len(pivots)

    # -- duality and flags -----------------------------------------------------

    def dual(self) -> "GeneratorMatrix":
        return GeneratorMatrix(self.field, nullspace(self.field, self.rows), n=self.n)

    def gram(self) -> np.ndarray:
        return matmul(self.field, self.rows, self.rows.T)

    def is_self_orthogonal(self) -> bool:
        return not self.gram().any()

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal()

    def is_lcd(self) -> bool:
        """Massey criterion: hull is trivial iff G G^T is nonsingular."""
        if self.k == 0:
            return True
        _, pivots = rref(self.field, self.gram())
        return len(pivots) == self.k

    def hull(self) -> "GeneratorMatrix":
        """C intersect C-dual, via the null space of G G^T applied to G."""
        if self.k == 0:
            return GeneratorMatrix(self.field, np.zeros((0, self.n), dtype=np.int64), n=self.n)
        ns = nullspace(self.field, self.gram())
        return GeneratorMatrix(self.field, matmul(self.field, ns, self.rows), n=self.n)

    # -- metrics -----------------------------------------------------------------

    def min_distance(self, budget: int = DEFAULT_BUDGET, engine: Optional[str] = None) -> Optional[Distance]:
        """Exact d by full enumeration when q^k <= budget, else an interval."""
        if self.k == 0:
            return None
        total = self.field.q**self.k
        if total <= budget:
            dist = weight_distribution(self.field, self.rows, engine)
            d = int(np.nonzero(dist[1:])[0][0]) + 1
            assert d <= self.n - self.k + 1, "Singleton bound violated"
            return Distance(d, d, True, total)
        ub, count = sampled_min_weight(self.field, self.rows, budget, engine)
        return Distance(1, ub, False, count)

    def weight_enumerator(self, budget: int = DEFAULT_BUDGET, engine: Optional[str] = None) -> np.ndarray:
        total = self.field.q**self.k
        if total > budget:
            raise BudgetExceeded(f"q^k = {total} exceeds budget {budget}")
        dist = weight_distribution(self.field, self.rows, engine)
        assert dist[0] >= 1 and int(dist.sum()) == total
        return dist

    # -- comparison ----------------------------------------------------------------

    def _check_compatible(self, other: "GeneratorMatrix"):
        if self.n != other.n or self.field != other.field:
            raise LengthMismatch("codes have different length or field")

    def equals(self, other: "GeneratorMatrix") -> bool:
        self._check_compatible(other)
        return self.k == other.k and np.array_equal(self.rows, other.rows)

    def permuted(self, perm: Sequence[int]) -> "GeneratorMatrix":
        """Columns rearranged: new column j is old column perm[j]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise LengthMismatch("not a permutation of the coordinates")
        return GeneratorMatrix(self.field, self.rows[:, perm], n=self.n)

    def __repr__(self):
        return f"GeneratorMatrix([{self.n}, {self.k}] over GF({self.field.q}))"

    def to_json(self) -> dict:
        F = self.field
        return {"q": {"p": F.p, "s": F.s},
                "rows": [[list(gf._digits(int(v), F.p, F.s)) for v in row] for row in self.rows]}

    @staticmethod
    def from_json(obj: dict) -> "GeneratorMatrix":
        F = gf.build_field(obj["q"]["p"], obj["q"].get("s", 1))
        rows = [[gf._undigits(list(np.atleast_1d(e)), F.p) if isinstance(e, (list, tuple)) else int(e) % F.q
                 for e in row] for row in obj["rows"]]
        arr = np.asarray(rows, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(0, 0)
        return GeneratorMatrix(F, arr)


def codes_equal(G1: GeneratorMatrix, G2: GeneratorMatrix) -> bool:
    return G1.equals(G2)


def permuted_equal(G1: GeneratorMatrix, G2: GeneratorMatrix, perm: Sequence[int]) -> bool:
    """Row-space equality of G1 and column-permuted G2."""
    G1._check_compatible(G2)
    return G1.equals(G2.permuted(perm))


def griesmer_check(n: int, k: int, d: int, q: int) -> GriesmerResult:
    """n >= sum_{i<k} ceil(d / q^i): attainment status of the bound."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    bound = sum(ceil(d / q**i) for i in range(k))
    if n == bound:
        return GriesmerResult(bound, "attains", 0)
    if n > bound:
        return GriesmerResult(bound, "slack", n - bound)
    return GriesmerResult(bound, "violates", n - bound)


def analysis_report(G: GeneratorMatrix, budget: int = DEFAULT_BUDGET) -> dict:
    """The JSON analysis block: parameters, duality flags, Griesmer status."""
    dist = G.min_distance(budget=budget)
    rep = {"n": G.n, "k": G.k,
           "d": dist.to_json() if dist is not None else None,
           "flags": {"self_dual": G.is_self_dual(),
                     "self_orthogonal": G.is_self_orthogonal(),
                     "lcd": G.is_lcd()}}
    if dist is not None and dist.exact:
        rep["griesmer"] = griesmer_check(G.n, G.k, dist.lower, G.field.q).to_json()
    return rep
