"""Exact integer matrices, Smith normal form, and integer linear solving.

Everything here runs over Python's arbitrary-precision integers: Smith
normal form is notorious for intermediate coefficient growth, so no
fixed-width arithmetic is permitted anywhere in the package.

The Smith normal form routine returns unimodular U, V with

    U * A * V = S,

S diagonal with nonnegative entries d_1 | d_2 | ... | d_r followed by
zeros.  The diagonal is the invariant-factor sequence of A, which is the
canonical input for every presented-abelian-group computation built on
top of this module.

>>> A = IntMatrix.from_rows([[2, 0], [0, 3]])
>>> smith_normal_form(A).S.diagonal()
(1, 6)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence


def _xgcd(a, b):
    """Extended gcd: returns (g, x, y) with x*a + y*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class IntMatrix:
    """An immutable rows x cols integer matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}")

    @staticmethod
    def from_rows(rows_data) -> "IntMatrix":
        rows_data = [list(r) for r in rows_data]
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if nrows else 0
        flat = []
        for r in rows_data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(int(v) for v in r)
        return IntMatrix(nrows, ncols, tuple(flat))

    @staticmethod
    def from_columns(cols_data, nrows=None) -> "IntMatrix":
        cols_data = [list(c) for c in cols_data]
        if nrows is None:
            if not cols_data:
                raise ValueError("row count needed for a matrix with no columns")
            nrows = len(cols_data[0])
        for c in cols_data:
            if len(c) != nrows:
                raise ValueError("ragged columns")
        if nrows == 0 or not cols_data:
            return IntMatrix.zeros(nrows, len(cols_data))
        return IntMatrix.from_rows(
            [[cols_data[j][i] for j in range(len(cols_data))] for i in range(nrows)])

    @staticmethod
    def identity(n) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0
                                     for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows, cols) -> "IntMatrix":
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j]
                               for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        a, b = self.entries, other.entries
        n, k, m = self.rows, self.cols, other.cols
        out = [0] * (n * m)
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for t in range(k):
                av = arow[t]
                if av:
                    brow = b[t * m:(t + 1) * m]
                    base = i * m
                    for j in range(m):
                        out[base + j] += av * brow[j]
        return IntMatrix(n, m, tuple(out))

    def mul_vector(self, v: Sequence[int]):
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(self[i, j] * v[j] for j in range(self.cols))
                     for i in range(self.rows))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols,
                         tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scaled(self, c) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(v for r in rows for v in r))

    def reduced_mod(self, m) -> "IntMatrix":
        if m <= 0:
            return self
        return IntMatrix(self.rows, self.cols, tuple(x % m for x in self.entries))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def diagonal(self):
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form data: U @ A @ V == S with U, V unimodular."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix


class _SnfWork:
    """Mutable elimination state.

    Tracks S together with U, U^-1 and V so that U*A*V = S stays true
    after every elementary operation.  U^-1 is accumulated directly
    (applying the inverse column operation for every row operation on S)
    because presented groups need generator representatives, which live
    in the columns of U^-1.
    """

    def __init__(self, A: IntMatrix):
        self.m, self.n = A.rows, A.cols
        self.S = A.to_rows()
        self.U = IntMatrix.identity(self.m).to_rows()
        self.Ui = IntMatrix.identity(self.m).to_rows()
        self.V = IntMatrix.identity(self.n).to_rows()

    # row operations act on S and U; U^-1 takes the inverse, transposed
    # to columns.

    def row_sub(self, i, j, q):
        """row_i -= q * row_j"""
        if q == 0:
            return
        for M in (self.S, self.U):
            ri, rj = M[i], M[j]
            for t in range(len(ri)):
                ri[t] -= q * rj[t]
        for r in self.Ui:
            r[j] += q * r[i]

    def row_swap(self, i, j):
        if i == j:
            return
        for M in (self.S, self.U):
            M[i], M[j] = M[j], M[i]
        for r in self.Ui:
            r[i], r[j] = r[j], r[i]

    def row_negate(self, i):
        for M in (self.S, self.U):
            M[i] = [-x for x in M[i]]
        for r in self.Ui:
            r[i] = -r[i]

    def row_transform2(self, i, j, a, b, c, d):
        """(row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j); ad-bc = 1."""
        for M in (self.S, self.U):
            ri, rj = M[i], M[j]
            for t in range(len(ri)):
                x, y = ri[t], rj[t]
                ri[t] = a * x + b * y
                rj[t] = c * x + d * y
        # inverse is (d, -b; -c, a), applied to columns of U^-1
        for r in self.Ui:
            x, y = r[i], r[j]
            r[i] = d * x - c * y
            r[j] = -b * x + a * y

    def col_sub(self, j, i, q):
        """col_j -= q * col_i"""
        if q == 0:
            return
        for M in (self.S, self.V):
            for r in M:
                r[j] -= q * r[i]

    def col_add(self, j, i, q=1):
        self.col_sub(j, i, -q)

    def col_swap(self, i, j):
        if i == j:
            return
        for M in (self.S, self.V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def col_negate(self, j):
        for M in (self.S, self.V):
            for r in M:
                r[j] = -r[j]


def _snf_full(A: IntMatrix):
    """Diagonalize A, returning (U, Uinv, S, V) with U*A*V = S in Smith form.

    Pivot strategy: smallest nonzero absolute value in the remaining
    block.  Any strategy gives the same invariant factors; this one keeps
    intermediate entries small on the sparse incidence matrices produced
    by the simplicial layer.
    """
    w = _SnfWork(A)
    S = w.S
    m, n = w.m, w.n
    t = 0
    while True:
        # locate smallest nonzero entry of the remaining block
        pivot = None
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    v = abs(v)
                    if best is None or v < best:
                        best = v
                        pivot = (i, j)
                        if v == 1:
                            break
            if best == 1:
                break
        if pivot is None:
            break
        w.row_swap(t, pivot[0])
        w.col_swap(t, pivot[1])
        if S[t][t] < 0:
            w.row_negate(t)
        while True:
            # clear the pivot column with row operations
            dirty = None
            for i in range(m):
                if i != t and S[i][t]:
                    w.row_sub(i, t, S[i][t] // S[t][t])
                    if S[i][t]:
                        dirty = i
            if dirty is not None:
                # a remainder smaller than the pivot: promote it
                i = min((i for i in range(m) if i != t and S[i][t]),
                        key=lambda i: abs(S[i][t]))
                w.row_swap(t, i)
                if S[t][t] < 0:
                    w.row_negate(t)
                continue
            # clear the pivot row with column operations
            dirty = None
            for j in range(n):
                if j != t and S[t][j]:
                    w.col_sub(j, t, S[t][j] // S[t][t])
                    if S[t][j]:
                        dirty = j
            if dirty is not None:
                j = min((j for j in range(n) if j != t and S[t][j]),
                        key=lambda j: abs(S[t][j]))
                w.col_swap(t, j)
                if S[t][t] < 0:
                    w.row_negate(t)
                continue
            break
        t += 1
        if t >= m or t >= n:
            break

    # enforce the divisibility chain d_i | d_{i+1} by gcd/lcm exchanges
    rank = t
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = S[i][i], S[i + 1][i + 1]
            if b % a == 0:
                continue
            changed = True
            w.col_add(i, i + 1)               # column i picks up b at row i+1
            g, x, y = _xgcd(a, b)
            w.row_transform2(i, i + 1, x, y, -(b // g), a // g)
            w.col_sub(i + 1, i, S[i][i + 1] // g)

    def pack(rows_data, nrows, ncols):
        return IntMatrix(nrows, ncols, tuple(v for r in rows_data for v in r))

    return (pack(w.U, m, m), pack(w.Ui, m, m),
            pack(w.S, m, n), pack(w.V, n, n))


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Smith normal form of an arbitrary integer matrix.

    >>> r = smith_normal_form(IntMatrix.zeros(2, 2))
    >>> r.S.is_zero() and r.U == IntMatrix.identity(2)
    True
    """
    U, _, S, V = _snf_full(A)
    return SnfResult(U, S, V)


def invariant_factors(A: IntMatrix):
    """The nonzero diagonal of the Smith form of A."""
    return tuple(d for d in smith_normal_form(A).S.diagonal() if d != 0)


class LinearSolver:
    """Repeated exact solving of A x = b against one fixed A.

    The Smith factorization is computed once; every solve is then two
    matrix-vector products and a divisibility scan.
    """

    def __init__(self, A: IntMatrix):
        self.A = A
        self._U, _, self._S, self._V = _snf_full(A)
        ndiag = min(A.rows, A.cols)
        self._diag = [self._S[i, i] for i in range(ndiag)]

    def solve(self, b: Sequence[int]) -> Optional[tuple]:
        A = self.A
        if len(b) != A.rows:
            raise ValueError("right-hand side length mismatch")
        c = self._U.mul_vector(b)
        z = [0] * A.cols
        for i in range(A.rows):
            d = self._diag[i] if i < len(self._diag) else 0
            if d == 0:
                if c[i] != 0:
                    return None
            else:
                if c[i] % d != 0:
                    return None
                z[i] = c[i] // d
        return self._V.mul_vector(z)


def solve(A: IntMatrix, b: Sequence[int]) -> Optional[tuple]:
    """One integer solution x of A x = b, or None when there is none.

    Solvability is decided exactly: with U A V = S the system becomes
    S z = U b, which is solvable iff each (U b)_i is divisible by d_i
    (and zero where d_i is)."""
    return LinearSolver(A).solve(b)


def solve_linear(A: IntMatrix, b: Sequence[int], modulus: int) -> Optional[tuple]:
    """Solve A x = b over Z (modulus 0) or over Z/modulus.

    The modular case is lifted to an exact problem by adjoining modulus
    times the identity as extra columns; the returned coordinates are
    reduced into [0, modulus).
    """
    if modulus < 0:
        raise ValueError("modulus must be nonnegative")
    if len(b) != A.rows:
        raise ValueError("right-hand side length mismatch")
    if modulus == 0:
        return solve(A, b)
    aug = A.hstack(IntMatrix.identity(A.rows).scaled(modulus))
    x = solve(aug, b)
    if x is None:
        return None
    return tuple(v % modulus for v in x[:A.cols])


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """A matrix whose columns are a basis of {x : A x = 0}."""
    U, _, S, V = _snf_full(A)
    ndiag = min(A.rows, A.cols)
    free = [j for j in range(A.cols) if j >= ndiag or S[j, j] == 0]
    return IntMatrix.from_columns([V.column(j) for j in free], nrows=A.cols)


def preimage_kernel_basis(A: IntMatrix, modulus: int) -> IntMatrix:
    """Basis of the lattice {x in Z^cols : A x = 0 mod modulus}.

    For modulus 0 this is the plain kernel.  Otherwise the lattice has
    full rank: with z = V^-1 x the condition reads d_i z_i = 0 mod m, so
    z_i ranges over (m / gcd(d_i, m)) Z and a basis is V times the
    corresponding diagonal scaling.
    """
    if modulus == 0:
        return kernel_basis(A)
    U, _, S, V = _snf_full(A)
    ndiag = min(A.rows, A.cols)
    cols = []
    for j in range(A.cols):
        d = S[j, j] if j < ndiag else 0
        scale = 1 if d == 0 else modulus // gcd(d, modulus)
        cols.append(tuple(scale * v for v in V.column(j)))
    return IntMatrix.from_columns(cols, nrows=A.cols)


def lattice_basis(G: IntMatrix) -> IntMatrix:
    """A basis (as columns) of the lattice spanned by the columns of G.

    From U G V = S the lattice is spanned by d_i * (U^-1 e_i), so the
    scaled nonzero columns of U^-1 form a basis.
    """
    _, Ui, S, _ = _snf_full(G)
    ndiag = min(G.rows, G.cols)
    cols = []
    for i in range(ndiag):
        d = S[i, i]
        if d != 0:
            cols.append(tuple(d * v for v in Ui.column(i)))
    return IntMatrix.from_columns(cols, nrows=G.rows)
