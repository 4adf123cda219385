"""Exact integer matrices, Smith normal form, and integer linear solving.

Everything here works with arbitrary-precision Python ints; no floats ever
enter the pipeline.  Matrices act on column vectors: an m x n matrix is a map
Z^n -> Z^m.  Empty matrices (0 x n, m x 0) are legal and behave as zero maps.
"""

from __future__ import annotations

from dataclasses import dataclass


class IntMatrix:
    """Dense integer matrix, row-major.  Treat instances as immutable."""

    __slots__ = ("data", "nrows", "ncols")

    def __init__(self, data, nrows=None, ncols=None):
        if nrows is None:
            nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        self.data = data
        self.nrows = nrows
        self.ncols = ncols

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if rows and ncols is None:
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(rows, len(rows), ncols or 0)

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)], m, n)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, entries, m=None, n=None):
        m = len(entries) if m is None else m
        n = len(entries) if n is None else n
        data = [[0] * n for _ in range(m)]
        for i, d in enumerate(entries):
            data[i][i] = d
        return cls(data, m, n)

    @classmethod
    def column(cls, entries):
        return cls([[v] for v in entries], len(entries), 1)

    def copy(self):
        return IntMatrix([row[:] for row in self.data], self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols}, {self.data!r})"

    def is_zero(self):
        return all(v == 0 for row in self.data for v in row)

    def transpose(self):
        return IntMatrix(
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.ncols,
            self.nrows,
        )

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        ob = other.data
        out = []
        for arow in self.data:
            row = [0] * other.ncols
            for k, a in enumerate(arow):
                if a:
                    brow = ob[k]
                    for j in range(other.ncols):
                        b = brow[j]
                        if b:
                            row[j] += a * b
            out.append(row)
        return IntMatrix(out, self.nrows, other.ncols)

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            self.nrows,
            self.ncols,
        )

    def __sub__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            self.nrows,
            self.ncols,
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return IntMatrix([[c * v for v in row] for row in self.data], self.nrows, self.ncols)

    def mul_vector(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("length mismatch")
        return [sum(a * v for a, v in zip(row, vec) if a) for row in self.data]

    def col(self, j):
        return [row[j] for row in self.data]

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row mismatch")
        return IntMatrix(
            [r1 + r2 for r1, r2 in zip(self.data, other.data)],
            self.nrows,
            self.ncols + other.ncols,
        )

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("col mismatch")
        return IntMatrix(
            [row[:] for row in self.data] + [row[:] for row in other.data],
            self.nrows + other.nrows,
            self.ncols,
        )

    def submatrix(self, rows, cols):
        return IntMatrix(
            [[self.data[i][j] for j in cols] for i in rows], len(rows), len(cols)
        )

    def mod(self, m):
        return IntMatrix([[v % m for v in row] for row in self.data], self.nrows, self.ncols)


@dataclass(frozen=True)
class SNFDecomposition:
    """D = U @ A @ V with U, V unimodular, D diagonal with a divisor chain."""

    matrix: IntMatrix
    D: IntMatrix
    U: IntMatrix | None
    V: IntMatrix | None

    @property
    def divisors(self):
        """Nonzero diagonal entries d_1 | d_2 | ... (all positive)."""
        out = []
        for i in range(min(self.D.nrows, self.D.ncols)):
            d = self.D.data[i][i]
            if d == 0:
                break
            out.append(d)
        return out

    @property
    def rank(self):
        return len(self.divisors)


def smith_normal_form(A: IntMatrix, transforms: bool = True) -> SNFDecomposition:
    """Smith normal form over Z by elementary unimodular row/column operations.

    Deterministic: the pivot is always a minimal nonzero absolute value,
    ties broken by position.  With transforms=False only D is produced,
    which is noticeably faster for divisor/rank scans.
    """
    m, n = A.nrows, A.ncols
    M = [row[:] for row in A.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)] if transforms else None
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if transforms else None

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            if U is not None:
                U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in M:
                row[i], row[j] = row[j], row[i]
            if V is not None:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row[dst] += c * row[src]
        if c:
            rs, rd = M[src], M[dst]
            for k in range(n):
                v = rs[k]
                if v:
                    rd[k] += c * v
            if U is not None:
                rs, rd = U[src], U[dst]
                for k in range(m):
                    v = rs[k]
                    if v:
                        rd[k] += c * v

    def add_col(src, dst, c):
        if c:
            for row in M:
                v = row[src]
                if v:
                    row[dst] += c * v
            if V is not None:
                for row in V:
                    v = row[src]
                    if v:
                        row[dst] += c * v

    def negate_row(i):
        M[i] = [-v for v in M[i]]
        if U is not None:
            U[i] = [-v for v in U[i]]

    def find_pivot(t):
        best = None
        bv = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    a = v if v > 0 else -v
                    if bv is None or a < bv:
                        bv = a
                        best = (i, j)
                        if a == 1:
                            return best
        return best

    t = 0
    limit = min(m, n)
    while t < limit:
        pos = find_pivot(t)
        if pos is None:
            break
        swap_rows(pos[0], t)
        swap_cols(pos[1], t)
        while True:
            # clear column t below the pivot
            dirty = False
            p = M[t][t]
            for i in range(t + 1, m):
                v = M[i][t]
                if v:
                    q = v // p
                    add_row(t, i, -q)
                    if M[i][t]:
                        # remainder smaller than pivot: promote it
                        swap_rows(i, t)
                        dirty = True
                        p = M[t][t]
            if dirty:
                continue
            p = M[t][t]
            for j in range(t + 1, n):
                v = M[t][j]
                if v:
                    q = v // p
                    add_col(t, j, -q)
                    if M[t][j]:
                        swap_cols(j, t)
                        dirty = True
                        p = M[t][t]
            if dirty:
                continue
            # pivot now divides its row and column remainders (all zero);
            # enforce divisibility against the rest of the submatrix
            p = M[t][t]
            offender = None
            for i in range(t + 1, m):
                row = M[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if M[t][t] < 0:
            negate_row(t)
        t += 1

    D = IntMatrix(M, m, n)
    return SNFDecomposition(
        A,
        D,
        IntMatrix(U, m, m) if transforms else None,
        IntMatrix(V, n, n) if transforms else None,
    )


def snf_divisors(A: IntMatrix) -> list[int]:
    return smith_normal_form(A, transforms=False).divisors


def bareiss_rank(A: IntMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Independent of the SNF code path on purpose: it is the oracle the SNF
    property tests compare against.
    """
    M = [row[:] for row in A.data]
    m, n = A.nrows, A.ncols
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if M[i][col]:
                piv = i
                break
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        p = M[row][col]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                M[i][j] = (p * M[i][j] - M[i][col] * M[row][j]) // prev
            M[i][col] = 0
        prev = p
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def determinant(A: IntMatrix) -> int:
    """Exact determinant by Bareiss elimination (square matrices only)."""
    if A.nrows != A.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = A.nrows
    if n == 0:
        return 1
    M = [row[:] for row in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = None
            for i in range(k + 1, n):
                if M[i][k]:
                    piv = i
                    break
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        p = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (p * M[i][j] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = p
    return sign * M[n - 1][n - 1]


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Basis of ker(A) as columns of an n x s matrix.

    The kernel of an integer matrix is a saturated sublattice, so the columns
    form a Z-basis and any kernel vector is an exact integer combination.
    """
    snf = smith_normal_form(A)
    r = snf.rank
    # columns of V beyond the rank span the kernel
    cols = list(range(r, A.ncols))
    return snf.V.submatrix(list(range(A.ncols)), cols)


def solve(A: IntMatrix, b: list[int]):
    """One integer solution x of A x = b, or None if none exists."""
    return IntegerSolver(A).solve(b)


class IntegerSolver:
    """Reusable exact solver for A x = b with fixed A (SNF precomputed)."""

    def __init__(self, A: IntMatrix):
        self.A = A
        self._snf = smith_normal_form(A)

    def solve(self, b):
        snf = self._snf
        ub = snf.U.mul_vector(b)
        r = snf.rank
        z = [0] * self.A.ncols
        for i in range(r):
            d = snf.D.data[i][i]
            if ub[i] % d:
                return None
            z[i] = ub[i] // d
        for i in range(r, self.A.nrows):
            if ub[i]:
                return None
        return snf.V.mul_vector(z)

    def solve_matrix(self, B: IntMatrix):
        cols = []
        for j in range(B.ncols):
            x = self.solve(B.col(j))
            if x is None:
                return None
            cols.append(x)
        return IntMatrix([[c[i] for c in cols] for i in range(self.A.ncols)], self.A.ncols, B.ncols)


def column_lattice_basis(A: IntMatrix) -> IntMatrix:
    """Independent columns spanning the column lattice of A (integer echelon).

    Deterministic column-style Hermite reduction; the output columns are a
    Z-basis of the lattice generated by the columns of A.
    """
    m = A.nrows
    work = [c for c in A.columns() if any(c)]
    basis = []
    for i in range(m):
        live = [c for c in work if c[i]]
        others = [c for c in work if not c[i]]
        if not live:
            work = others
            continue
        live.sort()
        piv = live.pop()
        for c in live:
            # Euclidean gcd step on row-i entries of piv and c
            while c[i]:
                q = piv[i] // c[i]
                if q:
                    for k in range(i, m):
                        piv[k] -= q * c[k]
                piv, c = c, piv
            if any(c):
                others.append(c)
        if piv[i] < 0:
            piv = [-v for v in piv]
        basis.append(piv)
        work = [c for c in others if any(c)]
    return IntMatrix([[c[i] for c in basis] for i in range(m)], m, len(basis))
