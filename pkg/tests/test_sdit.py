"""Hitting sets, the singularity decision procedure, max rank, weights."""

import random
from fractions import Fraction

import pytest

from liesdit.fields import QQ
from liesdit.linalg import Matrix
from liesdit.liealg import MatrixSpace, structure_constants
from liesdit.cartan import cartan_as_matrix_space, cartan_subalgebra
from liesdit.sdit import (NonCommutingError, NotLieAlgebraError,
                          NotSemisimpleError, UnsupportedSpectrumError,
                          hitting_set, random_rank_probe, sdit_decide,
                          semisimple_max_rank, singular_via_weights, weights)
from liesdit.families import (adjoint_of, heisenberg, lambda_space,
                              sl2_basis_hef, sl_monomial_cartan,
                              sl_monomial_rep)


def pipeline_cartan(S):
    L = structure_constants(S)
    res = cartan_subalgebra(L)
    return cartan_as_matrix_space(L, res.subalgebra)


class TestHittingSet:
    def test_single_variable(self):
        hs = hitting_set(1, 5)
        assert hs.points == ((Fraction(1),),)

    def test_k3_n2(self):
        hs = hitting_set(3, 2)
        assert len(hs.points) == 5
        assert hs.points[2] == (Fraction(1), Fraction(2), Fraction(4))

    def test_k2_n3(self):
        hs = hitting_set(2, 3)
        assert [pt[1] for pt in hs.points] == [Fraction(a) for a in range(4)]

    def test_sizes(self):
        for k in range(1, 21):
            for n in range(1, 21):
                assert len(hitting_set(k, n).points) == (k - 1) * n + 1

    def test_guarantee_random_products(self):
        rng = random.Random(7)
        for _ in range(50):
            k = rng.randint(1, 5)
            n = rng.randint(1, 5)
            forms = []
            for _ in range(rng.randint(1, n)):
                f = [0] * k
                while not any(f):
                    f = [rng.randint(-3, 3) for _ in range(k)]
                forms.append(f)
            hs = hitting_set(k, n)
            hit = False
            for pt in hs.points:
                vals = [sum(c * x for c, x in zip(f, pt)) for f in forms]
                if all(v != 0 for v in vals):
                    hit = True
                    break
            assert hit


class TestSditDecide:
    def test_lambda3_singular(self):
        assert sdit_decide(lambda_space(3)).verdict == "Singular"

    def test_lambda4_nonsingular(self):
        v = sdit_decide(lambda_space(4))
        assert v.verdict == "NonSingular"
        assert v.witness is not None and v.witness[1] == 4

    def test_sl2_nonsingular(self):
        v = sdit_decide(sl2_basis_hef())
        assert v.verdict == "NonSingular"
        assert v.max_rank_over_hits == 2

    def test_rejects_open_space(self):
        E12 = Matrix(QQ, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
        E23 = Matrix(QQ, [[0, 0, 0], [0, 0, 1], [0, 0, 0]])
        with pytest.raises(NotLieAlgebraError):
            sdit_decide(MatrixSpace([E12, E23]))

    def test_nilpotent_singular(self):
        assert sdit_decide(heisenberg()).verdict == "Singular"

    def test_monomial_reps_singular(self):
        for n, d in [(2, 1), (2, 2), (3, 1)]:
            assert sdit_decide(sl_monomial_rep(n, d)).verdict == "Singular"


class TestMaxRank:
    def test_lambda3(self):
        assert semisimple_max_rank(lambda_space(3)) == 2

    def test_sl2(self):
        assert semisimple_max_rank(sl2_basis_hef()) == 2

    def test_sl2_adjoint(self):
        assert semisimple_max_rank(adjoint_of(sl2_basis_hef())) == 2

    def test_rejects_non_semisimple(self):
        with pytest.raises(NotSemisimpleError):
            semisimple_max_rank(heisenberg())

    def test_matches_random_probe(self):
        for S in (lambda_space(3), lambda_space(4), sl2_basis_hef()):
            assert semisimple_max_rank(S) == random_rank_probe(S, samples=200, seed=3)


class TestWeights:
    def test_sl2_standard(self):
        S = sl2_basis_hef()
        W = weights(S, MatrixSpace([S.basis[0]]))
        vals = sorted(w[0] for w, _, _ in W.weights)
        assert vals == [Fraction(-1), Fraction(1)]
        assert singular_via_weights(W) == "NonSingular"

    def test_sl2_adjoint(self):
        A = adjoint_of(sl2_basis_hef())
        W = weights(A, pipeline_cartan(A))
        assert sorted(w[0] for w, _, _ in W.weights) == [-2, 0, 2]
        assert all(m == 1 for _, m, _ in W.weights)
        assert singular_via_weights(W) == "Singular"

    def test_monomial_21(self):
        S = sl_monomial_rep(2, 1)
        W = weights(S, sl_monomial_cartan(2, 1))
        assert sorted(w[0] for w, _, _ in W.weights) == [-2, 0, 2]

    def test_dim4_irreducible(self):
        # sl(2) on cubic forms in two variables: weights {3,1,-1,-3}
        h = Matrix(QQ, [[3, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -3]])
        e = Matrix(QQ, [[0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3], [0, 0, 0, 0]])
        f = Matrix(QQ, [[0, 0, 0, 0], [3, 0, 0, 0], [0, 2, 0, 0], [0, 0, 1, 0]])
        S = MatrixSpace([h, e, f])
        W = weights(S, MatrixSpace([h]))
        assert sorted(w[0] for w, _, _ in W.weights) == [-3, -1, 1, 3]
        assert singular_via_weights(W) == "NonSingular"
        assert sdit_decide(S).verdict == "NonSingular"

    def test_multiplicities_sum(self):
        S = sl_monomial_rep(3, 1)
        W = weights(S, sl_monomial_cartan(3, 1))
        assert sum(m for _, m, _ in W.weights) == S.n

    def test_irrational_spectrum_rejected(self):
        S = lambda_space(3)
        with pytest.raises(UnsupportedSpectrumError):
            weights(S, pipeline_cartan(S))

    def test_non_commuting_rejected(self):
        S = sl2_basis_hef()
        with pytest.raises(NonCommutingError):
            weights(S, MatrixSpace([S.basis[0], S.basis[1]]))


class TestProbe:
    def test_deterministic(self):
        S = lambda_space(4)
        assert random_rank_probe(S, seed=11) == random_rank_probe(S, seed=11)

    def test_probe_only_confirms_nonsingular(self):
        # a Singular verdict can never be contradicted by sampling
        S = lambda_space(3)
        assert random_rank_probe(S, samples=300, seed=5) < S.n
