"""Example family generators."""

import math

import pytest

from liesdit.liealg import closure_check, is_nilpotent, structure_constants
from liesdit.families import (heisenberg, lambda_space, make_example,
                              random_alternating_family, sl2_basis_hef,
                              sl_monomial_cartan, sl_monomial_module_dim,
                              sl_monomial_rep, sl_standard,
                              strict_upper_line)


class TestDimensions:
    def test_lambda(self):
        assert lambda_space(3).dim == 3
        assert lambda_space(4).dim == 6
        assert lambda_space(2).dim == 1

    def test_sl_standard(self):
        assert sl_standard(2).dim == 3
        assert sl_standard(3).dim == 8

    def test_monomial_module_dims(self):
        assert sl_monomial_module_dim(2, 1) == 3
        assert sl_monomial_module_dim(2, 2) == 5
        assert sl_monomial_module_dim(3, 1) == 10
        for n, d in [(2, 1), (2, 2), (3, 1)]:
            S = sl_monomial_rep(n, d)
            assert S.n == math.comb(d * n + n - 1, n - 1)

    def test_heisenberg(self):
        H = heisenberg()
        assert H.dim == 3
        assert is_nilpotent(structure_constants(H))


class TestClosure:
    def test_all_families_closed(self):
        spaces = [lambda_space(n) for n in range(2, 6)]
        spaces += [sl_standard(2), sl_standard(3), sl2_basis_hef(),
                   heisenberg(), strict_upper_line(),
                   sl_monomial_rep(2, 1), sl_monomial_rep(2, 2), sl_monomial_rep(3, 1)]
        for S in spaces:
            assert closure_check(S) is None


class TestMonomialCartan:
    def test_cartan_images_live_in_rep(self):
        for n, d in [(2, 1), (2, 2), (3, 1)]:
            S = sl_monomial_rep(n, d)
            for C in sl_monomial_cartan(n, d).basis:
                assert S.contains(C)

    def test_diagonal(self):
        for C in sl_monomial_cartan(3, 1).basis:
            assert all(C.entries[i][j] == 0
                       for i in range(C.rows) for j in range(C.cols) if i != j)


class TestRandomAlternating:
    def test_deterministic(self):
        a = random_alternating_family(4, 9)
        b = random_alternating_family(4, 9)
        assert a == b

    def test_alternating(self):
        for M in random_alternating_family(5, 1):
            assert (M + M.transpose()).is_zero()
            assert all(M.entries[i][i] == 0 for i in range(5))


class TestMakeExample:
    def test_dispatch(self):
        assert make_example("lambda", ["4"]).dim == 6
        assert make_example("sl-standard", ["2"]).dim == 3
        assert make_example("sl-monomial", ["2", "2"]).n == 5
        assert make_example("heisenberg", []).dim == 3
        assert make_example("adjoint", ["sl2"]).n == 3
        assert make_example("example2-random", ["4"], seed=2).n == 4
        assert make_example("middle-trivial", []).dim == 5

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            make_example("octonions", [])

    def test_guards(self):
        with pytest.raises(ValueError):
            lambda_space(1)
        with pytest.raises(ValueError):
            sl_monomial_rep(2, 100)
