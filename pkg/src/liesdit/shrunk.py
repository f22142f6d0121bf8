"""Shrunk-subspace structure: deficits, brute-force ncrk over GF(p),
block-triangular reductions, composition series, and the trivial-factor
criterion for existence of shrunk subspaces.

The composition series is found by spinning candidate vectors (standard
basis vectors, rational eigenvectors of basis matrices, common kernels)
into invariant subspaces, recursing on restriction and quotient, and
certifying leaves as absolutely irreducible via the Burnside criterion
(unital associative envelope of full dimension).  Leaves that resist both
are reported as undetermined rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import RationalField
from .linalg import (Matrix, Subspace, char_poly, enumerate_subspaces,
                     kernel, rational_roots, solve)
from .liealg import (MatrixSpace, associative_envelope, closure_check,
                     common_kernel, image_space)


@dataclass
class DeficitReport:
    subspace: Subspace
    image: Subspace
    deficit: int


def shrink_deficit(S: MatrixSpace, U: Subspace) -> DeficitReport:
    img = image_space(S, U)
    return DeficitReport(U, img, U.dim - img.dim)


def supermodularity_check(S: MatrixSpace, U1: Subspace, U2: Subspace) -> bool:
    """sd(U1 cap U2) + sd(U1 + U2) >= sd(U1) + sd(U2)."""
    sd = lambda U: shrink_deficit(S, U).deficit
    return sd(U1.intersect(U2)) + sd(U1 + U2) >= sd(U1) + sd(U2)


@dataclass
class NcrkReport:
    p: int
    ncrk: int
    max_deficit: int
    canonical_lower: Subspace
    canonical_upper: Subspace
    all_max_deficit_count: int


def ncrk_bruteforce(S: MatrixSpace, guard: int = 10 ** 6) -> NcrkReport:
    """Exact ncrk over GF(p) by exhausting all subspaces of GF(p)^n.

    Also returns the intersection and span of all maximum-deficit subspaces
    and checks both attain the maximum deficit themselves.
    """
    field = S.field
    if isinstance(field, RationalField):
        raise ValueError("brute force runs over a prime field; reduce the space first")
    p = field.p
    n = S.n
    best = None
    maxdef = []
    for U in enumerate_subspaces(n, p, guard):
        d = shrink_deficit(S, U).deficit
        if best is None or d > best:
            best = d
            maxdef = [U]
        elif d == best:
            maxdef.append(U)
    lower = maxdef[0]
    upper = maxdef[0]
    for U in maxdef[1:]:
        lower = lower.intersect(U)
        upper = upper + U
    if shrink_deficit(S, lower).deficit != best or shrink_deficit(S, upper).deficit != best:
        raise AssertionError("canonical max-deficit subspaces failed re-verification")
    return NcrkReport(p, n - best, best, lower, upper, len(maxdef))


def reduce_mod_p(S: MatrixSpace, p: int) -> MatrixSpace:
    """Entrywise reduction of a rational matrix space into GF(p)."""
    from .fields import GF
    field = GF(p)
    mats = [Matrix(field, [[field.coerce(x) for x in row] for row in B.entries])
            for B in S.basis]
    return MatrixSpace(mats) if mats else MatrixSpace([], field=field, n=S.n)


# ---------------------------------------------------------------------------
# Block-triangular structure

class ChainError(ValueError):
    pass


def _adapted_basis(S: MatrixSpace, chain):
    """Columns of a basis matrix T extending the invariant chain.

    chain must be strictly increasing, end at the full space, and exclude
    the zero subspace.  Returns (columns, quotient sizes).
    """
    field = S.field
    n = S.n
    prev = Subspace.zero(field, n)
    cols = []
    sizes = []
    for V in chain:
        added = 0
        for v in V.basis:
            if not prev.contains(v):
                cols.append(v)
                prev = prev + Subspace(field, n, [v])
                added += 1
        if prev != V:
            raise ChainError("chain is not increasing")
        if added == 0:
            raise ChainError("chain steps must strictly increase")
        sizes.append(added)
    if prev.dim != n:
        raise ChainError("chain does not end at the full space")
    return cols, sizes


def _invert(T: Matrix) -> Matrix:
    n = T.rows
    cols = []
    for j in range(n):
        e = [T.field.zero] * n
        e[j] = T.field.one
        sol = solve(T, e)
        if sol is None:
            raise ValueError("singular basis matrix")
        cols.append(sol)
    return Matrix.from_columns(T.field, cols)


def diagonal_blocks(S: MatrixSpace, chain) -> list:
    """Induced block spaces on the successive quotients of an invariant flag.

    chain lists the proper steps 0 = V_0 < V_1 < ... < V_d = F^n (the zero
    subspace may be omitted).
    """
    field = S.field
    n = S.n
    chain = list(chain)
    if not chain or chain[0].dim != 0:
        chain = [Subspace.zero(field, n)] + chain
    for V in chain:
        if not (image_space(S, V) <= V):
            raise ChainError("chain member of dim %d is not invariant" % V.dim)
    steps = chain[1:]
    if not steps or steps[-1].dim != n:
        steps = steps + [Subspace.full(field, n)]
    cols, sizes = _adapted_basis(S, steps)
    T = Matrix.from_columns(field, cols)
    Tinv = _invert(T)
    offsets = []
    start = 0
    for s in sizes:
        offsets.append((start, s))
        start += s
    blocks = []
    for (off, size) in offsets:
        mats = []
        for B in S.basis:
            A = Tinv @ B @ T
            mats.append(Matrix(field, [row[off:off + size]
                                       for row in A.entries[off:off + size]]))
        space = MatrixSpace([M for M in mats if not M.is_zero()], field=field, n=size)
        blocks.append(space)
    return blocks


def has_shrunk_bruteforce(S: MatrixSpace, guard: int = 10 ** 6) -> bool:
    if S.n == 0:
        return False
    return ncrk_bruteforce(S, guard).max_deficit > 0


def blockd_shrunk_check(blocks, guard: int = 10 ** 6) -> bool:
    """A block upper-triangular space has a shrunk subspace iff some
    diagonal block space does."""
    return any(has_shrunk_bruteforce(B, guard) for B in blocks)


# ---------------------------------------------------------------------------
# Composition series

@dataclass
class CompositionFactor:
    dimension: int
    block: MatrixSpace
    trivial: bool
    absolutely_irreducible: object  # True | "undetermined"


@dataclass
class CompositionSeries:
    chain: list  # increasing Subspace list, 0 = V_0 < ... < V_d = F^n
    factors: list  # CompositionFactor per step


class NotClosedSpaceError(ValueError):
    pass


def _spin(S: MatrixSpace, v) -> Subspace:
    """Smallest S-invariant subspace containing v."""
    U = Subspace(S.field, S.n, [v])
    while True:
        nxt = U + image_space(S, U)
        if nxt == U:
            return U
        U = nxt


def _rational_eigenvectors(B: Matrix):
    out = []
    poly = char_poly(B)
    for lam in rational_roots(poly):
        E = kernel(B - Matrix.identity(B.field, B.rows).scale(lam))
        out.extend(E.basis)
    return out


def _find_invariant(S: MatrixSpace) -> Subspace | None:
    """A proper nonzero invariant subspace, or None if the search fails."""
    n = S.n
    field = S.field
    if n <= 1:
        return None
    if S.dim == 0:
        return Subspace(field, n, [[field.one if j == 0 else field.zero
                                    for j in range(n)]])
    ck = common_kernel(S)
    if 0 < ck.dim < n:
        return ck
    img = image_space(S, Subspace.full(field, n))
    if 0 < img.dim < n:
        return img
    candidates = list(Matrix.identity(field, n).entries)
    for B in S.basis:
        candidates.extend(_rational_eigenvectors(B))
    for i in range(S.dim):
        for j in range(i + 1, S.dim):
            pair = MatrixSpace([S.basis[i], S.basis[j]])
            candidates.extend(common_kernel(pair).basis)
    for v in candidates:
        if all(x == field.zero for x in v):
            continue
        U = _spin(S, v)
        if 0 < U.dim < n:
            return U
    return None


def _restrict(S: MatrixSpace, T: Matrix, Tinv: Matrix, r: int):
    """Restriction (top-left r x r) and quotient (bottom-right) spaces in the
    adapted basis T whose first r columns span the invariant subspace."""
    n = S.n
    field = S.field
    restr, quot = [], []
    for B in S.basis:
        A = Tinv @ B @ T
        restr.append(Matrix(field, [row[:r] for row in A.entries[:r]]))
        quot.append(Matrix(field, [row[r:] for row in A.entries[r:]]))
    Sr = MatrixSpace([M for M in restr if not M.is_zero()], field=field, n=r)
    Sq = MatrixSpace([M for M in quot if not M.is_zero()], field=field, n=n - r)
    return Sr, Sq


def _adapted_to(U: Subspace) -> Matrix:
    """Basis matrix whose first dim(U) columns span U, completed by the
    standard vectors at the non-pivot coordinates."""
    field = U.field
    n = U.ambient
    pivs = set()
    for row in U.basis:
        pivs.add(next(j for j, x in enumerate(row) if x))
    cols = [list(v) for v in U.basis]
    for j in range(n):
        if j not in pivs:
            e = [field.zero] * n
            e[j] = field.one
            cols.append(e)
    return Matrix.from_columns(field, cols)


def _series_chain(S: MatrixSpace):
    """Recursive flag refinement.  Returns (chain of Subspaces incl. 0 and
    full, certified flags, one per factor)."""
    n = S.n
    field = S.field
    zero = Subspace.zero(field, n)
    full = Subspace.full(field, n)
    U = _find_invariant(S)
    if U is None:
        if n == 1:
            certified = True
        else:
            env = associative_envelope(S, unital=True)
            certified = env.dim == n * n
        return [zero, full], [certified]
    r = U.dim
    T = _adapted_to(U)
    Tinv = _invert(T)
    Sr, Sq = _restrict(S, T, Tinv, r)
    chain_r, flags_r = _series_chain(Sr)
    chain_q, flags_q = _series_chain(Sq)
    Tcols = [T.column(j) for j in range(n)]
    chain = []
    for X in chain_r[:-1]:
        vecs = [_combine(Tcols[:r], x, field, n) for x in X.basis]
        chain.append(Subspace(field, n, vecs))
    for Y in chain_q:
        vecs = list(U.basis) + [_combine(Tcols[r:], y, field, n) for y in Y.basis]
        chain.append(Subspace(field, n, vecs))
    return chain, flags_r + flags_q


def _combine(cols, coeffs, field, n):
    v = [field.zero] * n
    for c, col in zip(coeffs, cols):
        if c:
            v = [x + c * y for x, y in zip(v, col)]
    return v


def composition_series(S: MatrixSpace) -> CompositionSeries:
    bad = closure_check(S)
    if bad is not None:
        raise NotClosedSpaceError("not a matrix Lie algebra (bracket fails at %s)" % (bad,))
    chain, _ = _series_chain(S)
    blocks = diagonal_blocks(S, chain)
    factors = []
    prev = 0
    for V, block in zip(chain[1:], blocks):
        d = V.dim - prev
        prev = V.dim
        trivial = (d == 1 and block.dim == 0)
        if d == 1:
            abs_irr = True
        else:
            env = associative_envelope(block, unital=True)
            abs_irr = True if env.dim == d * d else "undetermined"
        factors.append(CompositionFactor(d, block, trivial, abs_irr))
    return CompositionSeries(chain, factors)


def has_shrunk_subspace(S: MatrixSpace):
    """Trivial-composition-factor criterion.

    Returns ("yes", factor index), ("no", None), or ("undetermined", None).
    """
    series = composition_series(S)
    for idx, f in enumerate(series.factors):
        if f.trivial:
            return ("yes", idx)
    if all(f.absolutely_irreducible is True for f in series.factors):
        return ("no", None)
    return ("undetermined", None)
