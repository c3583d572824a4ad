"""Exact integer and rational linear algebra.

Everything here works on arbitrary-precision Python integers (and
``fractions.Fraction`` where division is unavoidable), so determinants of
large plumbing matrices never overflow and signatures never depend on
floating point eigen-solvers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when a matrix has the wrong shape for an operation."""


class ContractError(ValueError):
    """Raised when an argument violates an operation's precondition."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        flat = []
        for r in rows:
            for x in r:
                if isinstance(x, bool) or int(x) != x:
                    raise ContractError(f"non-integer entry {x!r}")
                flat.append(int(x))
        return cls(len(rows), ncols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(list(zip(*self.tolist()))) if self.rows else IntMatrix(self.cols, 0, ())

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a, b = self.tolist(), other.tolist()
        bt = list(zip(*b)) if b else [()] * other.cols
        out = [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
        return IntMatrix(self.rows, other.cols, tuple(x for r in out for x in r))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None) -> "IntMatrix":
        cols = rows if cols is None else cols
        return IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows]) if rows else IntMatrix(0, len(cols), ())

    def __str__(self) -> str:
        rows = self.tolist()
        if not rows:
            return "[]"
        width = max(len(str(x)) for r in rows for x in r) if self.cols else 0
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in rows)


@dataclass(frozen=True)
class SNFResult:
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    def astuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum of Z/torsion[i]."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        if any(d < 2 for d in t):
            raise ContractError("torsion coefficients must be >= 2")
        if any(t[k + 1] % t[k] for k in range(len(t) - 1)):
            raise ContractError("torsion coefficients must form a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M)


def det_exact(M) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    M = _as_matrix(M)
    if not M.is_square:
        raise DimensionError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * p - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = p
    return sign * a[n - 1][n - 1]


def smith_normal_form(M) -> SNFResult:
    """Smith normal form D = U M V with unimodular U, V.

    Pivot policy: at each stage the entry of smallest nonzero absolute value
    in the trailing block, ties broken by lowest (row, col).
    """
    M = _as_matrix(M)
    m, n = M.rows, M.cols
    A = M.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for r in A:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = abs(A[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return SNFResult(IntMatrix.from_rows(A) if m else IntMatrix(0, n, ()),
                     IntMatrix.from_rows(U) if m else IntMatrix(0, 0, ()),
                     IntMatrix.from_rows(V) if n else IntMatrix(0, 0, ()))


def inertia(M) -> Inertia:
    """Sylvester inertia of a symmetric integer (or rational) matrix.

    Symmetric Gaussian elimination over the rationals. When every remaining
    diagonal entry is zero but some off-diagonal entry is not, the 2x2 block
    [[0, b], [b, 0]] is split off as a hyperbolic pair contributing (1, 0, 1).
    """
    if isinstance(M, IntMatrix):
        if not M.is_symmetric():
            raise ContractError("inertia needs a symmetric matrix")
        rows = M.tolist()
    else:
        rows = [list(r) for r in M]
        if any(len(r) != len(rows) for r in rows) or any(
            rows[i][j] != rows[j][i] for i in range(len(rows)) for j in range(i)
        ):
            raise ContractError("inertia needs a symmetric matrix")
    A = [[Fraction(x) for x in r] for r in rows]
    plus = zero = minus = 0
    while A:
        k = len(A)
        piv = next((i for i in range(k) if A[i][i] != 0), None)
        if piv is not None:
            p = A[piv][piv]
            if p > 0:
                plus += 1
            else:
                minus += 1
            keep = [i for i in range(k) if i != piv]
            A = [[A[i][j] - A[i][piv] * A[piv][j] / p for j in keep] for i in keep]
            continue
        pair = next(((i, j) for i in range(k) for j in range(i + 1, k) if A[i][j] != 0), None)
        if pair is None:
            zero += k
            break
        i0, j0 = pair
        b = A[i0][j0]
        plus += 1
        minus += 1
        keep = [i for i in range(k) if i not in pair]
        # Schur complement against [[0, b], [b, 0]], whose inverse is [[0, 1/b], [1/b, 0]]
        A = [
            [A[i][j] - (A[i][i0] * A[j0][j] + A[i][j0] * A[i0][j]) / b for j in keep]
            for i in keep
        ]
    return Inertia(plus, zero, minus)


def cokernel_invariants(M) -> AbelianGroup:
    """Z^rows / M Z^cols in invariant-factor form."""
    M = _as_matrix(M)
    diag = smith_normal_form(M).diagonal
    rank = sum(1 for d in diag if d != 0)
    return AbelianGroup(M.rows - rank, tuple(d for d in diag if d > 1))


def congruence_slide(M, i: int, j: int, c: int) -> IntMatrix:
    """Return E^T M E with E = I + c * e_(i,j).

    In handle language this replaces basis vector j by e_j + c*e_i, i.e.
    handle j is slid over handle i (c = -1 subtracts).
    """
    M = _as_matrix(M)
    if not M.is_symmetric():
        raise ContractError("congruence_slide needs a symmetric matrix")
    n = M.rows
    if i == j:
        raise ContractError("cannot slide a handle over itself")
    if not (0 <= i < n and 0 <= j < n):
        raise ContractError(f"index out of range for a {n}x{n} matrix")
    A = M.tolist()
    # column operation col_j += c col_i, then the matching row operation
    for r in A:
        r[j] += c * r[i]
    A[j] = [x + c * y for x, y in zip(A[j], A[i])]
    return IntMatrix.from_rows(A)


def apply_slides(M, script: Iterable[tuple[int, int, int]]) -> IntMatrix:
    M = _as_matrix(M)
    for i, j, c in script:
        M = congruence_slide(M, i, j, c)
    return M


def matrix_to_json(M: IntMatrix) -> str:
    return json.dumps([[str(x) for x in r] for r in M.tolist()])


def matrix_from_json(text: str) -> IntMatrix:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ContractError("matrix JSON must be an array of arrays")
    return IntMatrix.from_rows([[int(x) for x in r] for r in data])
