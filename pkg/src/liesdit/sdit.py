"""SDIT for matrix Lie algebras: Cartan subalgebra + hitting set.

The decision procedure computes a Cartan subalgebra C_1..C_k of the input
space, builds the Vandermonde hitting set for degree-n products of linear
forms in k variables, and evaluates the exact rank of every combination
sum alpha_i C_i.  A full-rank point is a non-singularity witness; if none
exists, the space is singular.  For semisimple inputs, the same scan yields
the maximum rank of the whole space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (Matrix, Subspace, char_poly, kernel, rank,
                     rational_roots)
from .liealg import (MatrixSpace, closure_check, is_semisimple,
                     structure_constants)
from .cartan import CartanConfig, CartanResult, cartan_as_matrix_space, cartan_subalgebra


class NotLieAlgebraError(ValueError):
    def __init__(self, pair):
        super().__init__("space is not closed under the bracket at pair %s" % (pair,))
        self.pair = pair


class NotSemisimpleError(ValueError):
    pass


@dataclass(frozen=True)
class HittingSet:
    k: int
    n: int
    points: tuple  # tuples (1, a, ..., a^(k-1))


def hitting_set(k: int, n: int) -> HittingSet:
    """Vandermonde points on which no nonzero degree-n product of linear
    forms in k variables can vanish everywhere.  Size (k-1)n + 1."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    size = (k - 1) * n + 1
    pts = []
    for a in range(size):
        alpha = Fraction(a)
        pts.append(tuple(alpha ** i for i in range(k)))
    return HittingSet(k, n, tuple(pts))


@dataclass
class SditVerdict:
    verdict: str  # "Singular" | "NonSingular"
    witness: tuple | None  # (point, rank) attaining full rank
    cartan: CartanResult
    max_rank_over_hits: int


def _prepare(S: MatrixSpace, cfg: CartanConfig | None):
    bad = closure_check(S)
    if bad is not None:
        raise NotLieAlgebraError(bad)
    L = structure_constants(S)
    res = cartan_subalgebra(L, cfg)
    C = cartan_as_matrix_space(L, res.subalgebra)
    return L, res, C


def _scan(C: MatrixSpace, n: int):
    k = C.dim
    if k == 0:
        return 0, None, HittingSet(0, n, ())
    hs = hitting_set(k, n)
    best = 0
    witness = None
    for pt in hs.points:
        r = rank(C.element(pt))
        if r > best:
            best = r
            witness = (pt, r)
            if best == n:
                break
    return best, witness, hs


def sdit_decide(S: MatrixSpace, cfg: CartanConfig | None = None) -> SditVerdict:
    L, res, C = _prepare(S, cfg)
    best, witness, _ = _scan(C, S.n)
    if best == S.n:
        return SditVerdict("NonSingular", witness, res, best)
    return SditVerdict("Singular", None, res, best)


def semisimple_max_rank(S: MatrixSpace, cfg: CartanConfig | None = None) -> int:
    """mrk(S) for semisimple S: max rank over the Cartan hitting-set scan."""
    bad = closure_check(S)
    if bad is not None:
        raise NotLieAlgebraError(bad)
    L = structure_constants(S)
    if not is_semisimple(L):
        raise NotSemisimpleError("maximum rank is only guaranteed for semisimple inputs")
    res = cartan_subalgebra(L, cfg)
    C = cartan_as_matrix_space(L, res.subalgebra)
    best = 0
    hs = hitting_set(C.dim, S.n)
    for pt in hs.points:
        best = max(best, rank(C.element(pt)))
    return best


def random_rank_probe(S: MatrixSpace, samples: int = 500, seed: int = 0,
                      lo: int = -10, hi: int = 10) -> int:
    """Max rank over seeded pseudo-random rational combinations of the basis."""
    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        coeffs = [rng.randint(lo, hi) for _ in range(S.dim)]
        best = max(best, rank(S.element(coeffs)))
        if best == S.n:
            break
    return best


# ---------------------------------------------------------------------------
# Weight decomposition

class NonCommutingError(ValueError):
    pass


class UnsupportedSpectrumError(ValueError):
    def __init__(self, poly):
        super().__init__("matrix spectrum is not rational; offending factor "
                         "coefficients %s" % (poly,))
        self.poly = poly


@dataclass
class WeightDecomposition:
    weights: list  # (weight tuple over the Cartan basis, multiplicity, Subspace)

    def has_zero_weight(self):
        return any(all(x == 0 for x in w) for w, _, _ in self.weights)


def weights(S: MatrixSpace, cartan_basis: MatrixSpace) -> WeightDecomposition:
    """Simultaneous eigenspace decomposition of F^n under commuting Cartan
    matrices with rational spectra."""
    n = S.n
    field = S.field
    mats = list(cartan_basis.basis)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not (mats[i] @ mats[j] - mats[j] @ mats[i]).is_zero():
                raise NonCommutingError("Cartan basis matrices %d and %d do not commute" % (i, j))
    pieces = [((), Subspace.full(field, n))]
    for C in mats:
        nxt = []
        for wt, V in pieces:
            for lam, E in _split_invariant(C, V):
                nxt.append((wt + (lam,), E))
        pieces = nxt
    out = [(wt, V.dim, V) for wt, V in pieces]
    return WeightDecomposition(out)


def _split_invariant(C: Matrix, V: Subspace):
    """Eigenspace splitting of C restricted to the C-invariant subspace V."""
    field = C.field
    r = V.dim
    if r == 0:
        return []
    cols = []
    for b in V.basis:
        w = C.apply(b)
        coords = V.coordinates(w)
        if coords is None:
            raise NonCommutingError("subspace is not invariant")
        cols.append(coords)
    R = Matrix.from_columns(field, cols)
    poly = char_poly(R)
    roots = rational_roots(poly)
    pieces = []
    covered = 0
    for lam in roots:
        E = kernel(R - Matrix.identity(field, r).scale(lam))
        if E.dim == 0:
            continue
        # map eigenvectors back to ambient coordinates
        amb = []
        for e in E.basis:
            v = [field.zero] * V.ambient
            for c, b in zip(e, V.basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            amb.append(v)
        pieces.append((lam, Subspace(field, V.ambient, amb)))
        covered += E.dim
    if covered != r:
        raise UnsupportedSpectrumError([str(c) for c in poly])
    return pieces


def singular_via_weights(W: WeightDecomposition) -> str:
    return "Singular" if W.has_zero_weight() else "NonSingular"
