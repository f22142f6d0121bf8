"""Exact dense linear algebra over Q and GF(p).

Row reduction over Q runs fraction-free (Bareiss one-step division) on
denominator-cleared integer rows, then normalizes to a canonical reduced row
echelon form.  Pivoting is deterministic (first nonzero entry, scanning
left-to-right then top-to-bottom), so RREF -- and hence Subspace equality --
is canonical.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .fields import GF, QQ, FieldError, GFElement, RationalField


class ShapeError(ValueError):
    pass


class Matrix:
    """Immutable dense matrix over a fixed field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries):
        rows = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ShapeError("ragged rows")
        else:
            w = 0
        self.field = field
        self.rows = len(rows)
        self.cols = w
        self.entries = rows

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, columns):
        return cls(field, columns).transpose()

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        z = self.field.zero
        return all(x == z for row in self.entries for x in row)

    def transpose(self):
        return Matrix(self.field, list(zip(*self.entries))) if self.rows else Matrix(self.field, [])

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.field, [[a + b for a, b in zip(r, s)]
                                   for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.field, [[a - b for a, b in zip(r, s)]
                                   for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.entries])

    def scale(self, c):
        c = self.field.coerce(c)
        return Matrix(self.field, [[c * a for a in r] for r in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeError("cannot multiply %dx%d by %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        cols = list(zip(*other.entries))
        return Matrix(self.field, [[_dot(r, c, self.field) for c in cols] for r in self.entries])

    __mul__ = __matmul__

    def __pow__(self, k):
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def apply(self, vec):
        """Matrix times column vector, given and returned as a tuple."""
        if len(vec) != self.cols:
            raise ShapeError("vector length %d, expected %d" % (len(vec), self.cols))
        v = tuple(self.field.coerce(x) for x in vec)
        return tuple(_dot(r, v, self.field) for r in self.entries)

    def trace(self):
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        t = self.field.zero
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def flatten(self):
        return tuple(x for row in self.entries for x in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return "Matrix(%s, %r)" % (self.field, [list(r) for r in self.entries])

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("shape mismatch: %dx%d vs %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))


def _dot(r, c, field):
    acc = field.zero
    for a, b in zip(r, c):
        acc = acc + a * b
    return acc


# ---------------------------------------------------------------------------
# Row reduction

def _bareiss_echelon(int_rows, ncols):
    """Fraction-free forward elimination on integer rows.

    Returns (rows, pivot_cols) where rows is in (non-reduced) echelon form
    with integer entries.
    """
    rows = [list(r) for r in int_rows]
    m = len(rows)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            fi = rows[i][c]
            for j in range(ncols):
                rows[i][j] = (piv * rows[i][j] - fi * rows[r][j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def _echelon_gf(rows, ncols, field):
    rows = [list(r) for r in rows]
    m = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def rref(M: Matrix):
    """Canonical reduced row echelon form. Returns (R, rank)."""
    field = M.field
    if M.rows == 0 or M.cols == 0:
        return M, 0
    if isinstance(field, RationalField):
        int_rows = []
        for row in M.entries:
            lcm = 1
            for x in row:
                lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
            int_rows.append([int(x * lcm) for x in row])
        ech, pivots = _bareiss_echelon(int_rows, M.cols)
        rows = [[Fraction(x) for x in r] for r in ech]
    else:
        ech, pivots = _echelon_gf(M.entries, M.cols, field)
        rows = [list(r) for r in ech]
    # normalize pivots to 1 and eliminate above
    for r, c in enumerate(pivots):
        inv = field.one / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        for i in range(r):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
    rank = len(pivots)
    z = field.zero
    full = rows + [[z] * M.cols for _ in range(M.rows - rank)]
    return Matrix(field, full), rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def rank(M: Matrix) -> int:
    return rref(M)[1]


def pivot_columns(M: Matrix):
    R, r = rref(M)
    pivots = []
    c = 0
    for i in range(r):
        while not R.entries[i][c]:
            c += 1
        pivots.append(c)
        c += 1
    return R, pivots


def kernel(M: Matrix) -> "Subspace":
    """Right null space of M, as a canonical Subspace of F^cols."""
    field = M.field
    n = M.cols
    R, pivots = pivot_columns(M)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    z, o = field.zero, field.one
    for fc in free:
        v = [z] * n
        v[fc] = o
        for i, pc in enumerate(pivots):
            v[pc] = -R.entries[i][fc]
        basis.append(v)
    return Subspace(field, n, basis)


def solve(A: Matrix, b) -> tuple | None:
    """One exact solution of A x = b (free variables set to 0), or None."""
    field = A.field
    b = [field.coerce(x) for x in b]
    if len(b) != A.rows:
        raise ShapeError("rhs length %d, expected %d" % (len(b), A.rows))
    aug = Matrix(field, [list(r) + [bb] for r, bb in zip(A.entries, b)])
    R, pivots = pivot_columns(aug)
    if A.cols in pivots:
        return None
    x = [field.zero] * A.cols
    for i, c in enumerate(pivots):
        x[c] = R.entries[i][A.cols]
    return tuple(x)


def solve_in_span(targets, M: Matrix):
    """Coefficients expressing M in span(targets), or None if not in span."""
    if not targets:
        return () if M.is_zero() else None
    for t in targets:
        if (t.rows, t.cols) != (M.rows, M.cols):
            raise ShapeError("target shape mismatch")
    A = Matrix.from_columns(M.field, [t.flatten() for t in targets])
    return solve(A, M.flatten())


# ---------------------------------------------------------------------------
# Subspaces

class Subspace:
    """Subspace of F^n in canonical RREF basis; equality is representational."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field, ambient, vectors):
        if any(len(v) != ambient for v in vectors):
            raise ShapeError("vector length != ambient dimension")
        if vectors:
            R, r = rref(Matrix(field, vectors))
            self.basis = R.entries[:r]
        else:
            self.basis = ()
        self.field = field
        self.ambient = ambient

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, [])

    @classmethod
    def full(cls, field, n):
        return cls(field, n, Matrix.identity(field, n).entries)

    @property
    def dim(self):
        return len(self.basis)

    def to_matrix(self):
        return Matrix(self.field, self.basis)

    def reduce(self, vec):
        """Residual of vec after elimination against the basis.

        The residual is zero iff vec lies in the subspace.
        """
        v = [self.field.coerce(x) for x in vec]
        if len(v) != self.ambient:
            raise ShapeError("vector length != ambient dimension")
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            f = v[c]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, vec):
        z = self.field.zero
        return all(x == z for x in self.reduce(vec))

    def coordinates(self, vec):
        """Coefficients of vec w.r.t. the RREF basis, or None."""
        if not self.contains(vec):
            return None
        v = [self.field.coerce(x) for x in vec]
        coeffs = []
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            f = v[c]
            coeffs.append(f)
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(coeffs)

    def __le__(self, other):
        self._check_ambient(other)
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __add__(self, other):
        self._check_ambient(other)
        return Subspace(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other):
        """Zassenhaus: RREF of [U|U; V|0]; rows with zero left half span U cap V."""
        self._check_ambient(other)
        n = self.ambient
        z = self.field.zero
        rows = [list(v) + list(v) for v in self.basis]
        rows += [list(v) + [z] * n for v in other.basis]
        if not rows:
            return Subspace.zero(self.field, n)
        R, r = rref(Matrix(self.field, rows))
        out = []
        for row in R.entries[:r]:
            if all(x == z for x in row[:n]):
                out.append(row[n:])
        return Subspace(self.field, n, out)

    def __repr__(self):
        return "Subspace(%s^%d, dim=%d)" % (self.field, self.ambient, self.dim)

    def _check_ambient(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise ShapeError("ambient mismatch")


# ---------------------------------------------------------------------------
# Finite-field subspace enumeration

def gaussian_binomial(n, k, p):
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_subspaces(n, p):
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


class EnumerationGuardError(ValueError):
    pass


def enumerate_subspaces(n, p, guard=10 ** 6):
    """Every subspace of GF(p)^n exactly once, by RREF pivot profile."""
    total = count_subspaces(n, p)
    if total > guard:
        raise EnumerationGuardError(
            "GF(%d)^%d has %d subspaces, exceeding guard %d" % (p, n, total, guard))
    field = GF(p)
    z, o = field.zero, field.one
    yield Subspace.zero(field, n)
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            free_slots = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n)
                          if j not in pivset]
            for values in itertools.product(range(p), repeat=len(free_slots)):
                rows = [[z] * n for _ in range(k)]
                for i, c in enumerate(pivots):
                    rows[i][c] = o
                for (i, j), v in zip(free_slots, values):
                    rows[i][j] = GFElement(v, p)
                sub = Subspace.__new__(Subspace)
                sub.field = field
                sub.ambient = n
                sub.basis = tuple(tuple(r) for r in rows)
                yield sub


# ---------------------------------------------------------------------------
# Characteristic polynomial and rational roots

def char_poly(M: Matrix):
    """Monic characteristic polynomial det(tI - M), coefficients low-to-high.

    Uses the Faddeev-LeVerrier recurrence; needs characteristic 0 or p > n.
    """
    if not M.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = M.rows
    field = M.field
    if field.characteristic and field.characteristic <= n:
        raise FieldError("Faddeev-LeVerrier needs characteristic 0 or > %d" % n)
    coeffs = [field.one]  # c_0 = 1, for t^n
    N = Matrix.identity(field, n)
    for k in range(1, n + 1):
        MN = M @ N
        ck = -(MN.trace() / field.coerce(k))
        coeffs.append(ck)
        if k < n:
            N = MN + Matrix.identity(field, n).scale(ck)
    coeffs.reverse()  # now low-to-high: [c_n, ..., c_1, 1]
    return coeffs


def poly_eval(coeffs, x, field=QQ):
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs):
    """All rational roots of a polynomial with Fraction coefficients.

    Coefficients are low-to-high.  Returns distinct roots, sorted.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial has every root")
    roots = set()
    s = 0
    while coeffs[s] == 0:
        s += 1
    if s > 0:
        roots.add(Fraction(0))
        coeffs = coeffs[s:]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    if len(ints) > 1:
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if poly_eval(coeffs, cand) == 0:
                        roots.add(cand)
    return sorted(roots)
