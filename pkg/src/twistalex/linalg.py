"""Exact linear algebra over a cyclotomic field and its Laurent ring.

``Mat`` holds field entries and supports Gaussian elimination (kernels,
ranks, inverses, membership tests).  ``MatL`` holds Laurent-polynomial
entries; its determinant uses fraction-free Bareiss elimination after
shifting every row to nonnegative exponents, so intermediate entries stay
polynomial and all divisions are exact.
"""

from __future__ import annotations

import itertools

from .errors import BadSize, DivisionByZero, FieldMismatch, NonSquare
from .laurent import LaurentPoly, laurent_exact_div, laurent_gcd


class Mat:
    """Dense matrix over a cyclotomic field, row-major, immutable by use."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, fld, rows, cols, entries):
        if len(entries) != rows * cols:
            raise BadSize(f"{rows}x{cols} matrix needs {rows*cols} entries")
        self.field = fld
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)

    @classmethod
    def identity(cls, fld, n):
        e = [fld.zero] * (n * n)
        for i in range(n):
            e[i * n + i] = fld.one
        return cls(fld, n, n, e)

    @classmethod
    def zero(cls, fld, rows, cols):
        return cls(fld, rows, cols, [fld.zero] * (rows * cols))

    @classmethod
    def from_rows(cls, fld, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise BadSize("ragged rows")
            flat.extend(row)
        return cls(fld, r, c, flat)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def _check(self, other):
        if self.field.N != other.field.N:
            raise FieldMismatch("matrices over different conductors")

    def __mul__(self, other):
        if isinstance(other, Mat):
            self._check(other)
            if self.cols != other.rows:
                raise BadSize("dimension mismatch in product")
            out = [self.field.zero] * (self.rows * other.cols)
            for i in range(self.rows):
                base = i * self.cols
                for k in range(self.cols):
                    a = self.entries[base + k]
                    if a:
                        ob = k * other.cols
                        rb = i * other.cols
                        for j in range(other.cols):
                            b = other.entries[ob + j]
                            if b:
                                out[rb + j] = out[rb + j] + a * b
            return Mat(self.field, self.rows, other.cols, out)
        # scalar
        return Mat(self.field, self.rows, self.cols,
                   [e * other for e in self.entries])

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise BadSize("dimension mismatch in sum")
        return Mat(self.field, self.rows, self.cols,
                   [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise BadSize("dimension mismatch in difference")
        return Mat(self.field, self.rows, self.cols,
                   [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Mat(self.field, self.rows, self.cols,
                   [-e for e in self.entries])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            self.entries == other.entries

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        if len(vec) != self.cols:
            raise BadSize("vector length mismatch")
        out = []
        for i in range(self.rows):
            acc = self.field.zero
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    e = self.entries[base + j]
                    if e:
                        acc = acc + e * v
            out.append(acc)
        return out

    def transpose(self):
        out = [self.field.zero] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j * self.rows + i] = self.entries[i * self.cols + j]
        return Mat(self.field, self.cols, self.rows, out)

    def trace(self):
        if self.rows != self.cols:
            raise NonSquare("trace of a non-square matrix")
        acc = self.field.zero
        for i in range(self.rows):
            acc = acc + self.entries[i * self.cols + i]
        return acc

    def det(self):
        if self.rows != self.cols:
            raise NonSquare("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return self.field.one
        m = [list(self.row(i)) for i in range(n)]
        det = self.field.one
        for k in range(n):
            piv = None
            for i in range(k, n):
                if m[i][k]:
                    piv = i
                    break
            if piv is None:
                return self.field.zero
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                det = -det
            det = det * m[k][k]
            inv = m[k][k].inverse()
            for i in range(k + 1, n):
                f = m[i][k]
                if f:
                    f = f * inv
                    for j in range(k, n):
                        m[i][j] = m[i][j] - f * m[k][j]
        return det

    def inverse(self):
        if self.rows != self.cols:
            raise NonSquare("inverse of a non-square matrix")
        n = self.rows
        m = [list(self.row(i)) + Mat.identity(self.field, n).row(i)
             for i in range(n)]
        for k in range(n):
            piv = None
            for i in range(k, n):
                if m[i][k]:
                    piv = i
                    break
            if piv is None:
                raise DivisionByZero("matrix is singular")
            m[k], m[piv] = m[piv], m[k]
            inv = m[k][k].inverse()
            m[k] = [e * inv for e in m[k]]
            for i in range(n):
                if i != k and m[i][k]:
                    f = m[i][k]
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        return Mat.from_rows(self.field, [r[n:] for r in m]) if n else \
            Mat(self.field, 0, 0, [])

    def kron(self, other):
        """Kronecker product (row-major block convention)."""
        self._check(other)
        r, c = self.rows * other.rows, self.cols * other.cols
        out = [self.field.zero] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i * self.cols + j]
                if not a:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        out[(i * other.rows + k) * c + j * other.cols + l] = \
                            a * other.entries[k * other.cols + l]
        return Mat(self.field, r, c, out)

    def hstack(self, other):
        self._check(other)
        if self.rows != other.rows:
            raise BadSize("row count mismatch in hstack")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Mat(self.field, self.rows, self.cols + other.cols,
                   [e for r in rows for e in r])

    def vstack(self, other):
        self._check(other)
        if self.cols != other.cols:
            raise BadSize("column count mismatch in vstack")
        return Mat(self.field, self.rows + other.rows, self.cols,
                   self.entries + other.entries)

    def __repr__(self):
        rows = [" ".join(str(e) for e in self.row(i))
                for i in range(self.rows)]
        return "Mat[" + "; ".join(rows) + "]"


def block_diag(fld, blocks):
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = Mat.zero(fld, n, m)
    i0 = j0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out.entries[(i0 + i) * m + (j0 + j)] = b[i, j]
        i0 += b.rows
        j0 += b.cols
    return out


def _echelon(rows_in, width):
    """Row echelon form with recorded pivot columns (destructive helper)."""
    rows = [list(r) for r in rows_in]
    pivots = []
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M):
    if M.rows == 0 or M.cols == 0:
        return 0
    rows, pivots = _echelon([M.row(i) for i in range(M.rows)], M.cols)
    return len(pivots)


def kernel_basis(M):
    """Deterministic exact basis of the right kernel of M."""
    fld = M.field
    if M.cols == 0:
        return []
    if M.rows == 0:
        basis = []
        for j in range(M.cols):
            v = [fld.zero] * M.cols
            v[j] = fld.one
            basis.append(v)
        return basis
    rows, pivots = _echelon([M.row(i) for i in range(M.rows)], M.cols)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for fcol in free:
        v = [fld.zero] * M.cols
        v[fcol] = fld.one
        for r, pcol in enumerate(pivots):
            v[pcol] = -rows[r][fcol]
        basis.append(v)
    return basis


def solve(M, b):
    """One solution x of M x = b, or None when the system is inconsistent."""
    fld = M.field
    if M.cols == 0:
        return [] if all(not e for e in b) else None
    aug = [M.row(i) + [b[i]] for i in range(M.rows)]
    rows, pivots = _echelon(aug, M.cols)
    x = [fld.zero] * M.cols
    for r, pcol in enumerate(pivots):
        x[pcol] = rows[r][M.cols]
    # verify (cheap and exact)
    for i in range(M.rows):
        acc = fld.zero
        base = i * M.cols
        for j in range(M.cols):
            e = M.entries[base + j]
            if e and x[j]:
                acc = acc + e * x[j]
        if acc != b[i]:
            return None
    return x


def in_column_space(M, b):
    return solve(M, b) is not None


# ---------------------------------------------------------------------------

class MatL:
    """Dense matrix of Laurent polynomials."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, fld, rows, cols, entries):
        if len(entries) != rows * cols:
            raise BadSize(f"{rows}x{cols} matrix needs {rows*cols} entries")
        self.field = fld
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)

    @classmethod
    def from_rows(cls, fld, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise BadSize("ragged rows")
            flat.extend(row)
        return cls(fld, r, c, flat)

    @classmethod
    def zero(cls, fld, rows, cols):
        z = LaurentPoly.zero(fld)
        return cls(fld, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, fld, n):
        m = cls.zero(fld, n, n)
        for i in range(n):
            m.entries[i * n + i] = LaurentPoly.one(fld)
        return m

    @classmethod
    def lift(cls, M, shift=0):
        """A field matrix viewed over the Laurent ring, times t^shift."""
        ent = [LaurentPoly(M.field, {shift: e}) if e else
               LaurentPoly.zero(M.field) for e in M.entries]
        return cls(M.field, M.rows, M.cols, ent)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __mul__(self, other):
        if isinstance(other, MatL):
            if self.cols != other.rows:
                raise BadSize("dimension mismatch in product")
            z = LaurentPoly.zero(self.field)
            out = [z] * (self.rows * other.cols)
            for i in range(self.rows):
                for k in range(self.cols):
                    a = self.entries[i * self.cols + k]
                    if a:
                        for j in range(other.cols):
                            b = other.entries[k * other.cols + j]
                            if b:
                                out[i * other.cols + j] = \
                                    out[i * other.cols + j] + a * b
            return MatL(self.field, self.rows, other.cols, out)
        return MatL(self.field, self.rows, self.cols,
                    [e * other for e in self.entries])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise BadSize("dimension mismatch in sum")
        return MatL(self.field, self.rows, self.cols,
                    [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise BadSize("dimension mismatch in difference")
        return MatL(self.field, self.rows, self.cols,
                    [a - b for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if not isinstance(other, MatL):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            self.entries == other.entries

    def submatrix(self, row_idx, col_idx):
        ent = [self.entries[i * self.cols + j]
               for i in row_idx for j in col_idx]
        return MatL(self.field, len(row_idx), len(col_idx), ent)

    def hstack(self, other):
        if self.rows != other.rows:
            raise BadSize("row count mismatch in hstack")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return MatL(self.field, self.rows, self.cols + other.cols,
                    [e for r in rows for e in r])

    def __repr__(self):
        rows = ["  ".join(str(e) for e in self.row(i))
                for i in range(self.rows)]
        return "MatL[" + "; ".join(rows) + "]"


def det_laurent(M):
    """Exact determinant of a square Laurent matrix.

    Fraction-free Bareiss over the polynomial ring: rows are first
    shifted to nonnegative exponents (the accumulated power of t is
    restored at the end), so every interior division is exact.  The
    result is not normalized.
    """
    if M.rows != M.cols:
        raise NonSquare("determinant of a non-square matrix")
    n = M.rows
    fld = M.field
    if n == 0:
        return LaurentPoly.one(fld)
    shift_total = 0
    rows = []
    for i in range(n):
        row = M.row(i)
        exps = [p.min_exp() for p in row if not p.is_zero()]
        if not exps:
            return LaurentPoly.zero(fld)
        e = min(exps)
        shift_total += e
        rows.append([p.shift(-e) for p in row])
    sign = 1
    prev = LaurentPoly.one(fld)
    for k in range(n - 1):
        if rows[k][k].is_zero():
            piv = None
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    piv = i
                    break
            if piv is None:
                return LaurentPoly.zero(fld)
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * rows[i][j] - rows[i][k] * rows[k][j]
                q = laurent_exact_div(num, prev)
                assert q is not None, "Bareiss division must be exact"
                rows[i][j] = q
            rows[i][k] = LaurentPoly.zero(fld)
        prev = pivot
    d = rows[n - 1][n - 1]
    if sign < 0:
        d = -d
    return d.shift(shift_total)


def gcd_of_minors(M, k):
    """Normalized gcd of all k x k minors of M (0 when all vanish)."""
    if k < 1 or k > min(M.rows, M.cols):
        raise BadSize(f"no {k}x{k} minors in a {M.rows}x{M.cols} matrix")
    fld = M.field
    one = LaurentPoly.one(fld)
    g = LaurentPoly.zero(fld)
    for rows_sel in itertools.combinations(range(M.rows), k):
        for cols_sel in itertools.combinations(range(M.cols), k):
            minor = det_laurent(M.submatrix(rows_sel, cols_sel))
            if minor.is_zero():
                continue
            g = laurent_gcd(g, minor)
            if g == one:
                return g
    return g
