"""Degree-d kernel-vector singularity certificates.

A certificate for a space spanned by B_1..B_m is a nonzero vector
v(x) = sum_alpha x^alpha v_alpha of homogeneous degree-d forms with
v(x)^t B(x) (left) or B(x) v(x) (right) identically zero, where
B(x) = x_1 B_1 + ... + x_m B_m.  Searching for one is an exact homogeneous
linear system over the monomial coefficients; monomials are ordered
graded-lexicographically, and the canonical certificate is the first RREF
kernel basis vector of that system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, kernel
from .liealg import LieStructure, MatrixSpace


DEFAULT_DEGREE_CAP = 4


class DegreeCapError(ValueError):
    pass


def monomials(m: int, d: int):
    """Exponent tuples of total degree d in m variables, graded-lex order
    (x_1 largest)."""
    if m == 0:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, m)
    return out


@dataclass
class KernelCertificate:
    side: str  # "left" | "right"
    degree: int
    num_matrices: int
    ambient: int
    coeffs: dict  # monomial exponent tuple -> vector in F^n

    def is_zero(self):
        return all(not any(x for x in v) for v in self.coeffs.values())


def _system(S: MatrixSpace, d: int, side: str):
    """Rows of the homogeneous system; unknowns are the stacked v_alpha."""
    m, n = S.dim, S.n
    field = S.field
    mons_d = monomials(m, d)
    mons_d1 = monomials(m, d + 1)
    col_of = {mon: idx for idx, mon in enumerate(mons_d)}
    z = field.zero
    rows = []
    for beta in mons_d1:
        for j in range(n):
            row = [z] * (len(mons_d) * n)
            for i in range(m):
                if beta[i] == 0:
                    continue
                alpha = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
                base = col_of[alpha] * n
                B = S.basis[i]
                for r in range(n):
                    # left: (v^t B)_j accumulates v[r] * B[r][j]
                    # right: (B v)_j accumulates B[j][r] * v[r]
                    c = B.entries[r][j] if side == "left" else B.entries[j][r]
                    if c:
                        row[base + r] = row[base + r] + c
            rows.append(row)
    return rows, mons_d


def find_kernel_certificate(S: MatrixSpace, d: int = 1, side: str = "right",
                            degree_cap: int = DEFAULT_DEGREE_CAP):
    """A canonical nonzero degree-d certificate, or None."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d > degree_cap:
        raise DegreeCapError("degree %d exceeds cap %d" % (d, degree_cap))
    if S.dim == 0:
        return None
    rows, mons_d = _system(S, d, side)
    n = S.n
    ker = kernel(Matrix(S.field, rows))
    if ker.dim == 0:
        return None
    v = ker.basis[0]
    coeffs = {mon: tuple(v[i * n:(i + 1) * n]) for i, mon in enumerate(mons_d)}
    return KernelCertificate(side, d, S.dim, n, coeffs)


def verify_certificate(S: MatrixSpace, cert: KernelCertificate) -> bool:
    """Exact symbolic expansion of v(x)^t B(x) (or B(x) v(x)) equals zero."""
    if cert.num_matrices != S.dim or cert.ambient != S.n:
        raise ValueError("certificate shape does not match the space")
    if cert.is_zero():
        raise ValueError("certificate is identically zero")
    field = S.field
    n = S.n
    acc: dict = {}
    for alpha, v in cert.coeffs.items():
        for i, B in enumerate(S.basis):
            beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
            if cert.side == "left":
                term = tuple(sum((v[r] * B.entries[r][j] for r in range(n)),
                                 field.zero) for j in range(n))
            else:
                term = B.apply(v)
            if beta in acc:
                acc[beta] = tuple(a + b for a, b in zip(acc[beta], term))
            else:
                acc[beta] = term
    z = field.zero
    return all(all(x == z for x in vec) for vec in acc.values())


def linker_cross_identity_check(S: MatrixSpace, cert: KernelCertificate) -> bool:
    """Polarized identity for degree-1 certificates:
    rho(x) psi(y) + rho(y) psi(x) = 0 on all basis pairs."""
    if cert.degree != 1:
        raise ValueError("cross identity applies to degree-1 certificates")
    field = S.field
    m, n = S.dim, S.n
    vecs = []
    for i in range(m):
        mon = tuple(1 if t == i else 0 for t in range(m))
        vecs.append(cert.coeffs[mon])
    z = field.zero
    for i in range(m):
        for j in range(i, m):
            if cert.side == "right":
                lhs = tuple(a + b for a, b in zip(S.basis[i].apply(vecs[j]),
                                                  S.basis[j].apply(vecs[i])))
            else:
                ti = tuple(sum((vecs[i][r] * S.basis[j].entries[r][c] for r in range(n)),
                               field.zero) for c in range(n))
                tj = tuple(sum((vecs[j][r] * S.basis[i].entries[r][c] for r in range(n)),
                               field.zero) for c in range(n))
                lhs = tuple(a + b for a, b in zip(ti, tj))
            if any(x != z for x in lhs):
                return False
    return True


def representation_hom_check(L: LieStructure, cert: KernelCertificate) -> bool:
    """psi([x, y]) - rho(x) psi(y) = 0 on all basis pairs, where psi maps the
    i-th basis matrix to the certificate's i-th linear coefficient vector."""
    if cert.degree != 1:
        raise ValueError("homomorphism identity applies to degree-1 certificates")
    S = L.space
    m = L.m
    field = L.field
    vecs = []
    for i in range(m):
        mon = tuple(1 if t == i else 0 for t in range(m))
        vecs.append(cert.coeffs[mon])
    z = field.zero
    n = S.n
    for i in range(m):
        for j in range(m):
            lhs = [z] * n
            for k in range(m):
                c = L.constants[i][j][k]
                if c:
                    lhs = [a + c * b for a, b in zip(lhs, vecs[k])]
            rhs = S.basis[i].apply(vecs[j])
            if any(a != b for a, b in zip(lhs, rhs)):
                return False
    return True


class NotAlternatingError(ValueError):
    pass


def example2_space(C) -> MatrixSpace:
    """Space of matrices [C_1 v, ..., C_n v] over v, for alternating C_i.

    Basis element M_j takes v = e_j: column i of M_j is C_i e_j.  The result
    always carries a left degree-1 kernel certificate v(x) = sum x_j e_j.
    """
    C = list(C)
    n = len(C)
    if n == 0:
        raise ValueError("need at least one matrix")
    field = C[0].field
    for M in C:
        if (M.rows, M.cols) != (n, n):
            raise ValueError("expected %d matrices of size %dx%d" % (n, n, n))
        if any(M.entries[i][i] for i in range(n)):
            raise NotAlternatingError("nonzero diagonal entry")
        if not (M + M.transpose()).is_zero() and field.characteristic != 2:
            raise NotAlternatingError("matrix is not skew-symmetric")
        if field.characteristic == 2 and not (M + M.transpose()).is_zero():
            raise NotAlternatingError("matrix is not alternating")
    mats = []
    for j in range(n):
        cols = [M.column(j) for M in C]
        mats.append(Matrix.from_columns(field, cols))
    mats = [M for M in mats if not M.is_zero()]
    if not mats:
        return MatrixSpace([], field=field, n=n)
    return MatrixSpace(mats)
