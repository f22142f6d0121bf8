"""Degree-d kernel-vector certificates: search, verification, and the
representation identities."""

import math

import pytest

from liesdit.fields import QQ
from liesdit.linalg import Matrix
from liesdit.liealg import structure_constants
from liesdit.kernelcert import (DegreeCapError, KernelCertificate,
                                NotAlternatingError, example2_space,
                                find_kernel_certificate,
                                linker_cross_identity_check, monomials,
                                representation_hom_check, verify_certificate)
from liesdit.families import (adjoint_of, lambda_space,
                              random_alternating_family, sl2_basis_hef,
                              sl_standard)


class TestMonomials:
    def test_counts(self):
        for m in range(1, 5):
            for d in range(0, 4):
                assert len(monomials(m, d)) == math.comb(m + d - 1, d)

    def test_graded_lex_order(self):
        assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert monomials(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_degrees(self):
        assert all(sum(mon) == 3 for mon in monomials(4, 3))


class TestAdjointCertificates:
    def test_sl2_adjoint_right(self):
        A = adjoint_of(sl2_basis_hef())
        cert = find_kernel_certificate(A, d=1, side="right")
        assert cert is not None
        assert verify_certificate(A, cert)
        assert linker_cross_identity_check(A, cert)
        assert representation_hom_check(structure_constants(A), cert)

    def test_so3_adjoint_right(self):
        A = adjoint_of(lambda_space(3))
        cert = find_kernel_certificate(A, d=1, side="right")
        assert cert is not None
        assert verify_certificate(A, cert)
        assert linker_cross_identity_check(A, cert)

    def test_standard_reps_have_none(self):
        for S in (sl2_basis_hef(), sl_standard(3)):
            assert find_kernel_certificate(S, d=1, side="right") is None
            assert find_kernel_certificate(S, d=1, side="left") is None


class TestExample2:
    def test_rotation_pair(self):
        J = Matrix(QQ, [[0, 1], [-1, 0]])
        E = example2_space([J, J])
        assert E.dim == 2
        cert = find_kernel_certificate(E, d=1, side="left")
        assert cert is not None and verify_certificate(E, cert)

    def test_coordinate_basis_n3(self):
        def alt(i, j):
            rows = [[0] * 3 for _ in range(3)]
            rows[i][j] = 1
            rows[j][i] = -1
            return Matrix(QQ, rows)

        E = example2_space([alt(0, 1), alt(0, 2), alt(1, 2)])
        cert = find_kernel_certificate(E, d=1, side="left")
        assert cert is not None and verify_certificate(E, cert)

    def test_random_families(self):
        for seed in range(5):
            C = random_alternating_family(4, seed)
            E = example2_space(C)
            cert = find_kernel_certificate(E, d=1, side="left")
            assert cert is not None
            assert verify_certificate(E, cert)

    def test_rejects_non_alternating(self):
        with pytest.raises(NotAlternatingError):
            example2_space([Matrix(QQ, [[1, 0], [0, 1]]), Matrix(QQ, [[0, 1], [-1, 0]])])
        with pytest.raises(NotAlternatingError):
            example2_space([Matrix(QQ, [[0, 1], [1, 0]]), Matrix(QQ, [[0, 1], [-1, 0]])])


class TestVerification:
    def test_perturbed_certificate_fails(self):
        A = adjoint_of(sl2_basis_hef())
        cert = find_kernel_certificate(A, d=1, side="right")
        mon = next(iter(cert.coeffs))
        bad = dict(cert.coeffs)
        v = list(bad[mon])
        v[0] = v[0] + 1
        bad[mon] = tuple(v)
        broken = KernelCertificate(cert.side, cert.degree, cert.num_matrices,
                                   cert.ambient, bad)
        assert not verify_certificate(A, broken)

    def test_zero_certificate_rejected(self):
        A = adjoint_of(sl2_basis_hef())
        zero = KernelCertificate("right", 1, A.dim, A.n,
                                 {mon: (QQ.zero,) * A.n for mon in monomials(A.dim, 1)})
        with pytest.raises(ValueError):
            verify_certificate(A, zero)

    def test_shape_mismatch_rejected(self):
        A = adjoint_of(sl2_basis_hef())
        cert = find_kernel_certificate(A, d=1, side="right")
        with pytest.raises(ValueError):
            verify_certificate(sl2_basis_hef(), cert)

    def test_degree_cap(self):
        with pytest.raises(DegreeCapError):
            find_kernel_certificate(sl2_basis_hef(), d=5)

    def test_higher_degree_search_runs(self):
        # degree-2 search on a singular space: certificate implies singularity
        E = example2_space(random_alternating_family(3, 2))
        cert = find_kernel_certificate(E, d=2, side="left")
        if cert is not None:
            assert verify_certificate(E, cert)
