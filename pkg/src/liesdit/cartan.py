"""Cartan subalgebra computation by regular-element descent.

The candidate x starts at the basis element with the smallest Fitting null
component of ad_x.  While K = F_0(ad_x) fails the Cartan verification
(nilpotent + self-normalizing), a basis element y of K with non-nilpotent
restricted adjoint action is chosen and the line x + c(y - x), c ranging over
the trial set Omega, is scanned for a strict drop in dim F_0.  Omega is
enlarged on stall.  Every result is re-verified against the definition, so
the descent heuristics never compromise correctness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, Subspace, kernel
from .liealg import (LieStructure, MatrixSpace, ad_matrix, bracket_coeffs,
                     is_nilpotent, is_self_normalizing, is_subalgebra,
                     subspace_matrices)


class DescentStalledError(RuntimeError):
    pass


@dataclass(frozen=True)
class CartanConfig:
    omega: tuple | None = None  # default {0, 1, ..., m}
    max_rounds: int = 8
    enlarge_factor: int = 2

    def omega_for(self, m: int):
        if self.omega is not None:
            vals = tuple(self.omega)
            if len(set(vals)) != len(vals):
                raise ValueError("omega values must be distinct")
            if len(vals) < m + 1:
                raise ValueError("need at least m+1 omega values")
            return vals
        return tuple(range(m + 1))


@dataclass
class CartanResult:
    subalgebra: Subspace  # coefficient space
    regular_element: tuple
    verified: bool
    descent_trace: list  # (coefficient vector, fitting dim)


def fitting_null(L: LieStructure, x) -> Subspace:
    """F_0(ad_x): kernel of (ad_x)^m with m = dim of the algebra."""
    m = L.m
    if m == 0:
        return Subspace.zero(L.field, 0)
    A = ad_matrix(L, x)
    P = A
    ker = kernel(P)
    for _ in range(m - 1):
        if ker.dim == m:
            break
        P = P @ A
        nxt = kernel(P)
        if nxt == ker:
            break
        ker = nxt
    return ker


def verify_cartan(L: LieStructure, H: Subspace) -> bool:
    """Nilpotent and self-normalizing, per the definition."""
    if not is_subalgebra(L, H):
        return False
    if not _nilpotent_subalgebra(L, H):
        return False
    return is_self_normalizing(L, H)


def _nilpotent_subalgebra(L: LieStructure, H: Subspace) -> bool:
    cur = H
    for _ in range(max(H.dim, 1) + 1):
        nxt = Subspace(L.field, L.m,
                       [bracket_coeffs(L, a, b) for a in cur.basis for b in H.basis])
        if nxt.dim == 0:
            return True
        if nxt == cur:
            return False
        cur = nxt
    return False


def _restricted_ad(L: LieStructure, y, K: Subspace) -> Matrix:
    """Matrix of ad_y restricted to the subalgebra K, in K's RREF basis."""
    cols = []
    for b in K.basis:
        w = bracket_coeffs(L, y, b)
        coords = K.coordinates(w)
        if coords is None:
            raise ValueError("subspace not invariant under ad_y")
        cols.append(coords)
    return Matrix.from_columns(L.field, cols)


def _is_nilpotent_matrix(M: Matrix) -> bool:
    return (M ** max(M.rows, 1)).is_zero() if M.rows else True


def cartan_subalgebra(L: LieStructure, cfg: CartanConfig | None = None) -> CartanResult:
    cfg = cfg or CartanConfig()
    m = L.m
    field = L.field
    if m == 0:
        return CartanResult(Subspace.zero(field, 0), (), True, [])
    # nilpotent algebras are their own Cartan subalgebra
    if is_nilpotent(L):
        whole = Subspace.full(field, m)
        return CartanResult(whole, tuple([field.zero] * m), True, [(None, m)])

    unit = Matrix.identity(field, m).entries
    x = min(unit, key=lambda e: fitting_null(L, e).dim)
    trace = []
    omega = [field.coerce(c) for c in cfg.omega_for(m)]
    for _ in range(cfg.max_rounds):
        # descend as far as this omega allows; each step strictly shrinks F_0
        while True:
            K = fitting_null(L, x)
            if not trace or K.dim < trace[-1][1]:
                trace.append((tuple(x), K.dim))
            if verify_cartan(L, K):
                return CartanResult(K, tuple(x), True, trace)
            y = _pick_non_nilpotent(L, K)
            if y is None:
                # cannot happen for K = F_0(ad_x): such K is self-normalizing,
                # so verification can only fail on nilpotency (Engel gives a y)
                raise DescentStalledError("no non-nilpotent direction found")
            best = None
            for c in omega:
                z = tuple(a + c * (b - a) for a, b in zip(x, y))
                d = fitting_null(L, z).dim
                if d < K.dim and (best is None or d < best[0]):
                    best = (d, z)
            if best is None:
                break
            x = best[1]
        omega = [field.coerce(v) for v in
                 range(len(omega) * max(cfg.enlarge_factor, 2))]
    raise DescentStalledError("descent stalled after %d rounds" % cfg.max_rounds)


def _pick_non_nilpotent(L: LieStructure, K: Subspace):
    for b in K.basis:
        if not _is_nilpotent_matrix(_restricted_ad(L, b, K)):
            return b
    return None


def cartan_as_matrix_space(L: LieStructure, H: Subspace) -> MatrixSpace:
    """Expand a coefficient-space Cartan subalgebra into ambient matrices."""
    mats = subspace_matrices(L.space, H)
    if not mats:
        return MatrixSpace([], field=L.space.field, n=L.space.n)
    return MatrixSpace(mats)
