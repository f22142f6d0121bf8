"""Matrix Lie algebra structure.

A ``MatrixSpace`` is an ordered basis of n x n matrices.  Once closure under
the commutator is established, a ``LieStructure`` carries the structure
constants, and all subalgebra-level objects (series terms, normalizers,
Cartan candidates) live in the coefficient space F^m relative to that basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import RationalField
from .linalg import Matrix, Subspace, ShapeError, rank, solve


class NotClosedError(ValueError):
    def __init__(self, i, j):
        super().__init__("bracket [B_%d, B_%d] falls outside the span" % (i, j))
        self.pair = (i, j)


class NotSubalgebraError(ValueError):
    pass


def bracket(A: Matrix, B: Matrix) -> Matrix:
    return A @ B - B @ A


class MatrixSpace:
    """Span of linearly independent square matrices over a common field.

    Dependent input matrices are dropped (keeping the first maximal
    independent subset) and the original count is recorded in
    ``reduced_from``.
    """

    __slots__ = ("field", "n", "basis", "reduced_from", "_span")

    def __init__(self, matrices, field=None, n=None):
        matrices = list(matrices)
        if matrices:
            field = matrices[0].field
            n = matrices[0].rows
        elif field is None or n is None:
            raise ShapeError("empty space needs explicit field and ambient size")
        for M in matrices:
            if M.field != field:
                raise ShapeError("mixed fields in basis")
            if (M.rows, M.cols) != (n, n):
                raise ShapeError("expected %dx%d matrices" % (n, n))
        kept = []
        span = Subspace.zero(field, n * n)
        for M in matrices:
            flat = M.flatten()
            if not span.contains(flat):
                kept.append(M)
                span = span + Subspace(field, n * n, [flat])
        self.field = field
        self.n = n
        self.basis = tuple(kept)
        self.reduced_from = len(matrices) if len(kept) != len(matrices) else None
        self._span = span

    @property
    def dim(self):
        return len(self.basis)

    def span_subspace(self):
        """The flattened span inside F^(n*n)."""
        return self._span

    def contains(self, M: Matrix):
        return self._span.contains(M.flatten())

    def element(self, coeffs):
        """Linear combination of the basis with the given coefficients."""
        if len(coeffs) != self.dim:
            raise ShapeError("expected %d coefficients" % self.dim)
        acc = Matrix.zeros(self.field, self.n, self.n)
        for c, B in zip(coeffs, self.basis):
            c = self.field.coerce(c)
            if c:
                acc = acc + B.scale(c)
        return acc

    def __repr__(self):
        return "MatrixSpace(%s, n=%d, dim=%d)" % (self.field, self.n, self.dim)


def closure_check(S: MatrixSpace):
    """None if all pairwise brackets stay in the span, else the first bad pair."""
    for i in range(S.dim):
        for j in range(i + 1, S.dim):
            if not S.contains(bracket(S.basis[i], S.basis[j])):
                return (i, j)
    return None


@dataclass(frozen=True)
class LieStructure:
    """Structure constants alpha[i][j][k] with [a_i, a_j] = sum_k alpha_ijk a_k."""

    space: MatrixSpace
    constants: tuple  # m x m x m, coerced scalars

    @property
    def m(self):
        return self.space.dim

    @property
    def field(self):
        return self.space.field


def structure_constants(S: MatrixSpace) -> LieStructure:
    m = S.dim
    field = S.field
    z = field.zero
    alpha = [[[z] * m for _ in range(m)] for _ in range(m)]
    A = Matrix.from_columns(field, [B.flatten() for B in S.basis]) if m else None
    for i in range(m):
        for j in range(i + 1, m):
            br = bracket(S.basis[i], S.basis[j])
            coeffs = solve(A, br.flatten())
            if coeffs is None:
                raise NotClosedError(i, j)
            alpha[i][j] = list(coeffs)
            alpha[j][i] = [-c for c in coeffs]
    return LieStructure(S, tuple(tuple(tuple(r) for r in pl) for pl in alpha))


def bracket_coeffs(L: LieStructure, u, v):
    """Coefficient vector of [u, v] given coefficient vectors u, v."""
    m = L.m
    field = L.field
    u = [field.coerce(x) for x in u]
    v = [field.coerce(x) for x in v]
    out = [field.zero] * m
    for i in range(m):
        if not u[i]:
            continue
        for j in range(m):
            if not v[j]:
                continue
            f = u[i] * v[j]
            row = L.constants[i][j]
            for k in range(m):
                if row[k]:
                    out[k] = out[k] + f * row[k]
    return tuple(out)


def ad_matrix(L: LieStructure, x) -> Matrix:
    """Matrix of ad_x on the coefficient space, in the stored basis."""
    m = L.m
    field = L.field
    x = [field.coerce(c) for c in x]
    if len(x) != m:
        raise ShapeError("coefficient vector length %d, expected %d" % (len(x), m))
    rows = [[field.zero] * m for _ in range(m)]
    for i in range(m):
        if not x[i]:
            continue
        for j in range(m):
            row = L.constants[i][j]
            for k in range(m):
                if row[k]:
                    rows[k][j] = rows[k][j] + x[i] * row[k]
    return Matrix(field, rows)


def basis_ad_matrices(L: LieStructure):
    m = L.m
    z, o = L.field.zero, L.field.one
    return [ad_matrix(L, [o if i == j else z for j in range(m)]) for i in range(m)]


def adjoint_space(L: LieStructure) -> MatrixSpace:
    """Image of ad as a matrix space in M(m); dependent images are reduced."""
    ads = basis_ad_matrices(L)
    if not ads:
        return MatrixSpace([], field=L.field, n=0)
    return MatrixSpace(ads)


def killing_form(L: LieStructure) -> Matrix:
    ads = basis_ad_matrices(L)
    m = L.m
    rows = [[(ads[i] @ ads[j]).trace() for j in range(m)] for i in range(m)]
    return Matrix(L.field, rows)


def is_semisimple(L: LieStructure) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate (char 0 only)."""
    if not isinstance(L.field, RationalField):
        raise ValueError("semisimplicity test requires characteristic 0")
    if L.m == 0:
        return False
    return rank(killing_form(L)) == L.m


@dataclass
class SeriesReport:
    kind: str  # "lower-central" | "derived"
    terms: list  # Subspace values in the coefficient space
    stabilized: bool


def _bracket_subspaces(L: LieStructure, A: Subspace, B: Subspace) -> Subspace:
    vecs = [bracket_coeffs(L, a, b) for a in A.basis for b in B.basis]
    return Subspace(L.field, L.m, vecs)


def lower_central_series(L: LieStructure, within: Subspace | None = None) -> SeriesReport:
    g = within if within is not None else Subspace.full(L.field, L.m)
    terms = [g]
    cur = g
    for _ in range(L.m + 1):
        nxt = _bracket_subspaces(L, cur, g)
        if nxt == cur:
            return SeriesReport("lower-central", terms, True)
        terms.append(nxt)
        cur = nxt
        if cur.dim == 0:
            return SeriesReport("lower-central", terms, True)
    return SeriesReport("lower-central", terms, False)


def derived_series(L: LieStructure) -> SeriesReport:
    g = Subspace.full(L.field, L.m)
    terms = [g]
    cur = g
    for _ in range(L.m + 1):
        nxt = _bracket_subspaces(L, cur, cur)
        if nxt == cur:
            return SeriesReport("derived", terms, True)
        terms.append(nxt)
        cur = nxt
        if cur.dim == 0:
            return SeriesReport("derived", terms, True)
    return SeriesReport("derived", terms, False)


def is_nilpotent(L: LieStructure, within: Subspace | None = None) -> bool:
    rep = lower_central_series(L, within)
    return rep.terms[-1].dim == 0


def is_solvable(L: LieStructure) -> bool:
    rep = derived_series(L)
    return rep.terms[-1].dim == 0


def is_subalgebra(L: LieStructure, H: Subspace) -> bool:
    return _bracket_subspaces(L, H, H) <= H


def normalizer(L: LieStructure, H: Subspace) -> Subspace:
    """{x : [x, H] <= H}, as a coefficient-space subspace."""
    if not is_subalgebra(L, H):
        raise NotSubalgebraError("normalizer requires a subalgebra")
    m = L.m
    field = L.field
    if H.dim == 0:
        return Subspace.full(field, m)
    rows = []
    unit = Matrix.identity(field, m).entries
    for h in H.basis:
        # columns of map x -> [x, h], then project modulo H
        cols = [H.reduce(bracket_coeffs(L, unit[i], h)) for i in range(m)]
        for k in range(m):
            rows.append([cols[i][k] for i in range(m)])
    return kernel_of_rows(field, m, rows)


def kernel_of_rows(field, width, rows):
    from .linalg import kernel
    if not rows:
        return Subspace.full(field, width)
    return kernel(Matrix(field, rows))


def is_self_normalizing(L: LieStructure, H: Subspace) -> bool:
    return normalizer(L, H) == H


def generated_subalgebra(L: LieStructure, gens) -> Subspace:
    """Smallest bracket-closed subspace containing the generators."""
    cur = Subspace(L.field, L.m, [list(g) for g in gens])
    for _ in range(L.m + 1):
        nxt = cur + _bracket_subspaces(L, cur, cur)
        if nxt == cur:
            return cur
        cur = nxt
    return cur


def associative_envelope(S: MatrixSpace, unital: bool = True) -> MatrixSpace:
    """Closure of the span under matrix products, inside M(n).

    Breadth-first: new words arise by right-multiplying current elements by
    the original generators.  Caps at dimension n^2.
    """
    n = S.n
    field = S.field
    span = Subspace.zero(field, n * n)
    kept = []
    frontier = []
    seed = list(S.basis)
    if unital:
        seed = [Matrix.identity(field, n)] + seed
    for M in seed:
        if not span.contains(M.flatten()):
            span = span + Subspace(field, n * n, [M.flatten()])
            kept.append(M)
            frontier.append(M)
    while frontier and span.dim < n * n:
        nxt = []
        for M in frontier:
            for G in S.basis:
                P = M @ G
                if not span.contains(P.flatten()):
                    span = span + Subspace(field, n * n, [P.flatten()])
                    kept.append(P)
                    nxt.append(P)
        frontier = nxt
    if not kept:
        return MatrixSpace([], field=field, n=n)
    return MatrixSpace(kept)


def common_kernel(S: MatrixSpace) -> Subspace:
    """{v in F^n : B v = 0 for every basis matrix B}."""
    from .linalg import kernel
    if S.dim == 0:
        return Subspace.full(S.field, S.n)
    stacked = Matrix(S.field, [row for B in S.basis for row in B.entries])
    return kernel(stacked)


def image_space(S: MatrixSpace, U: Subspace) -> Subspace:
    """Span of {B u : B basis, u basis of U}."""
    if U.ambient != S.n or U.field != S.field:
        raise ShapeError("ambient mismatch")
    vecs = [B.apply(u) for B in S.basis for u in U.basis]
    return Subspace(S.field, S.n, vecs)


def subspace_matrices(S: MatrixSpace, H: Subspace):
    """Expand a coefficient-space subspace into ambient matrices."""
    return [S.element(h) for h in H.basis]
