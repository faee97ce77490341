"""Exact sparse integer matrices and Smith-form diagonalization.

Entries are Python ints, so there is no overflow to guard against.  The
elimination picks unit pivots by a Markowitz cost ``(row_nnz-1)*(col_nnz-1)``
and falls back to Euclidean pivot reduction when no unit is left.  Row and
column operations can be recorded in the four transform matrices
``P, P^-1, Q, Q^-1`` with ``P M Q`` monomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence


class SparseMatrix:
    """Row-dict integer matrix: ``rows[i][j] = value`` with no stored zeros."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict[int, dict[int, int]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}
        for i, row in (rows or {}).items():
            clean = {j: v for j, v in row.items() if v}
            if clean:
                self.rows[i] = clean

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], ncols: int | None = None) -> "SparseMatrix":
        nrows = len(dense)
        if ncols is None:
            ncols = len(dense[0]) if nrows else 0
        return cls(nrows, ncols, {i: {j: int(v) for j, v in enumerate(row) if v} for i, row in enumerate(dense)})

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[dict[int, int]]) -> "SparseMatrix":
        rows: dict[int, dict[int, int]] = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    rows.setdefault(i, {})[j] = v
        return cls(nrows, len(columns), rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def get(self, i: int, j: int) -> int:
        return self.rows.get(i, {}).get(j, 0)

    def column(self, j: int) -> dict[int, int]:
        return {i: row[j] for i, row in self.rows.items() if j in row}

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [{} for _ in range(self.ncols)]
        for i, row in self.rows.items():
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def transpose(self) -> "SparseMatrix":
        rows: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v
        return SparseMatrix(self.ncols, self.nrows, rows)

    T = property(transpose)

    def matvec(self, vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, row in self.rows.items():
            s = 0
            if len(vec) < len(row):
                for j, v in vec.items():
                    a = row.get(j)
                    if a:
                        s += a * v
            else:
                for j, a in row.items():
                    v = vec.get(j)
                    if v:
                        s += a * v
            if s:
                out[i] = s
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        rows: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            acc: dict[int, int] = {}
            for k, a in row.items():
                orow = other.rows.get(k)
                if orow:
                    for j, b in orow.items():
                        acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                rows[i] = acc
        return SparseMatrix(self.nrows, other.ncols, rows)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                tgt[j] = tgt.get(j, 0) + v
        return SparseMatrix(self.nrows, self.ncols, rows)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def is_zero(self) -> bool:
        return not self.rows

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in self.rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        cpos = {c: k for k, c in enumerate(cols)}
        out: dict[int, dict[int, int]] = {}
        for a, i in enumerate(rows):
            row = self.rows.get(i)
            if not row:
                continue
            sel = {cpos[j]: v for j, v in row.items() if j in cpos}
            if sel:
                out[a] = sel
        return SparseMatrix(len(rows), len(cols), out)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


class _RowOps:
    """A square matrix stored by rows that only ever receives ``row_dst += q row_src``."""

    __slots__ = ("rows",)

    def __init__(self, n: int):
        self.rows: dict[int, dict[int, int]] = {i: {i: 1} for i in range(n)}

    def add(self, dst: int, src: int, q: int) -> None:
        if not q:
            return
        d = self.rows[dst]
        for j, v in self.rows[src].items():
            w = d.get(j, 0) + q * v
            if w:
                d[j] = w
            else:
                d.pop(j, None)

    def matrix(self, n: int) -> SparseMatrix:
        return SparseMatrix(n, n, self.rows)


@dataclass
class SmithResult:
    """Diagonalization ``P M Q = D`` where ``D`` has one entry per pivot.

    ``pivots`` lists ``(row, col, value)``; rows and columns are not permuted.
    ``P``/``P_inv``/``Q``/``Q_inv`` are present only when requested.
    """

    shape: tuple[int, int]
    pivots: list[tuple[int, int, int]]
    P: SparseMatrix | None = None
    P_inv: SparseMatrix | None = None
    Q: SparseMatrix | None = None
    Q_inv: SparseMatrix | None = None
    invariants: list[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def invariant_factors(diagonal: Iterable[int]) -> list[int]:
    """Turn any nonzero diagonal into the divisibility chain ``d_1 | d_2 | ...``."""
    vals = [abs(v) for v in diagonal if v]
    ones = sum(1 for v in vals if v == 1)
    big = [v for v in vals if v != 1]
    for a in range(len(big)):
        for b in range(a + 1, len(big)):
            g = gcd(big[a], big[b])
            big[a], big[b] = g, big[a] // g * big[b]
    big.sort()
    ones += sum(1 for v in big if v == 1)
    return [1] * ones + [v for v in big if v != 1]


def smith_normal_form(M: SparseMatrix, *, left: bool = False, right: bool = False) -> SmithResult:
    """Diagonalize ``M`` by unimodular row and column operations.

    Parameters
    ----------
    left, right : bool
        Record the row transforms ``P, P^-1`` and/or column transforms
        ``Q, Q^-1``.
    """
    m, n = M.shape
    rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in M.rows.items()}
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)

    P = _RowOps(m) if left else None
    PinvT = _RowOps(m) if left else None
    QT = _RowOps(n) if right else None
    Qinv = _RowOps(n) if right else None

    def row_add(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        s = rows[src]
        d = rows.setdefault(dst, {})
        for j, v in s.items():
            w = d.get(j, 0) + q * v
            if w:
                if j not in d:
                    cols[j].add(dst)
                d[j] = w
            else:
                del d[j]
                cols[j].discard(dst)
        if not d:
            del rows[dst]
        if left:
            P.add(dst, src, q)
            PinvT.add(src, dst, -q)

    def col_add(dst: int, src: int, q: int) -> None:
        # col_dst += q * col_src
        for i in list(cols.get(src, ())):
            r = rows[i]
            w = r.get(dst, 0) + q * r[src]
            if w:
                if dst not in r:
                    cols.setdefault(dst, set()).add(i)
                r[dst] = w
            else:
                del r[dst]
                cols[dst].discard(i)
        if right:
            QT.add(dst, src, q)
            Qinv.add(src, dst, -q)

    pivots: list[tuple[int, int, int]] = []
    while rows:
        best = None
        best_cost = None
        small = None
        for i, r in rows.items():
            rl = len(r) - 1
            for j, v in r.items():
                if v == 1 or v == -1:
                    cost = rl * (len(cols[j]) - 1)
                    if best_cost is None or cost < best_cost:
                        best, best_cost = (i, j), cost
                        if cost == 0:
                            break
                elif small is None or abs(v) < abs(rows[small[0]][small[1]]):
                    small = (i, j)
            if best_cost == 0:
                break
        i, j = best if best is not None else small
        while True:
            p = rows[i][j]
            others = [k for k in cols[j] if k != i]
            for k in others:
                q = rows[k][j] // p
                if q:
                    row_add(k, i, -q)
            rest = [k for k in cols[j] if k != i]
            if rest:
                i = min(rest, key=lambda k: (abs(rows[k][j]), k))
                continue
            others = [l for l in rows[i] if l != j]
            for l in others:
                q = rows[i][l] // p
                if q:
                    col_add(l, j, -q)
            rest = [l for l in rows[i] if l != j]
            if rest:
                j = min(rest, key=lambda l: (abs(rows[i][l]), l))
                continue
            break
        pivots.append((i, j, rows[i][j]))
        del rows[i]
        cols[j].discard(i)
        # the pivot column is empty apart from the pivot, the pivot row is gone
    res = SmithResult((m, n), pivots)
    if left:
        res.P = P.matrix(m)
        res.P_inv = PinvT.matrix(m).transpose()
    if right:
        res.Q = QT.matrix(n).transpose()
        res.Q_inv = Qinv.matrix(n)
    res.invariants = invariant_factors(v for _, _, v in pivots)
    return res


def smith_invariants(M: SparseMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of ``M`` in divisibility order."""
    if not isinstance(M, SparseMatrix):
        M = SparseMatrix.from_dense(M)
    return smith_normal_form(M).invariants


def rank(M: SparseMatrix) -> int:
    return smith_normal_form(M).rank


def determinant(dense: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    a = [list(map(int, row)) for row in dense]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(M: SparseMatrix | Sequence[Sequence[int]]) -> bool:
    """Square with determinant ``+-1``; decided by sparse elimination, not by expansion."""
    if not isinstance(M, SparseMatrix):
        n = len(M)
        if any(len(row) != n for row in M):
            return False
        M = SparseMatrix.from_dense(M, n)
    if M.nrows != M.ncols:
        return False
    res = smith_normal_form(M)
    return res.rank == M.nrows and all(v == 1 for v in res.invariants)
