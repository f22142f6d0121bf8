"""Generators for the example families used by the tests and the CLI."""

from __future__ import annotations

import math
import random

from .fields import QQ
from .linalg import Matrix
from .liealg import MatrixSpace, adjoint_space, structure_constants


def _unit(n, i, j, field=QQ):
    z, o = field.zero, field.one
    return Matrix(field, [[o if (r, c) == (i, j) else z for c in range(n)]
                          for r in range(n)])


def lambda_space(n: int) -> MatrixSpace:
    """Alternating n x n matrices: basis {E_ij - E_ji : i < j}."""
    if n < 2:
        raise ValueError("need n >= 2")
    mats = [_unit(n, i, j) - _unit(n, j, i)
            for i in range(n) for j in range(i + 1, n)]
    return MatrixSpace(mats)


def sl_standard(n: int) -> MatrixSpace:
    """Trace-zero matrices: E_ij (i != j) and E_ii - E_(i+1)(i+1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    mats = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    mats += [_unit(n, i, i) - _unit(n, i + 1, i + 1) for i in range(n - 1)]
    return MatrixSpace(mats)


def sl2_basis_hef() -> MatrixSpace:
    """sl(2) in the (h, e, f) order used throughout the tests."""
    h = Matrix(QQ, [[1, 0], [0, -1]])
    e = Matrix(QQ, [[0, 1], [0, 0]])
    f = Matrix(QQ, [[0, 0], [1, 0]])
    return MatrixSpace([h, e, f])


def heisenberg(n: int = 3) -> MatrixSpace:
    """Heisenberg algebra in M(n): E_1j, E_jn (1 < j < n) and E_1n."""
    if n < 3:
        raise ValueError("need n >= 3")
    mats = [_unit(n, 0, j) for j in range(1, n - 1)]
    mats += [_unit(n, j, n - 1) for j in range(1, n - 1)]
    mats.append(_unit(n, 0, n - 1))
    return MatrixSpace(mats)


def strict_upper_line() -> MatrixSpace:
    """span{E12} in M(2)."""
    return MatrixSpace([_unit(2, 0, 1)])


def borel_sl2() -> MatrixSpace:
    """span{h, e}: solvable but not nilpotent."""
    h = Matrix(QQ, [[1, 0], [0, -1]])
    e = Matrix(QQ, [[0, 1], [0, 0]])
    return MatrixSpace([h, e])


def middle_trivial_fixture() -> MatrixSpace:
    """span{E11, E12, E13, E23, E33} in M(3): block-triangular with a trivial
    middle composition factor."""
    return MatrixSpace([_unit(3, 0, 0), _unit(3, 0, 1), _unit(3, 0, 2),
                        _unit(3, 1, 2), _unit(3, 2, 2)])


def adjoint_of(S: MatrixSpace) -> MatrixSpace:
    return adjoint_space(structure_constants(S))


# ---------------------------------------------------------------------------
# Monomial representations of sl(n)

def _degree_monomials(n: int, total: int):
    """Exponent tuples of the given total degree in n variables, graded-lex
    (x_1 largest first)."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), total, n)
    return out


def sl_monomial_module_dim(n: int, d: int) -> int:
    return math.comb(d * n + n - 1, n - 1)


def sl_monomial_rep(n: int, d: int, guard: int = 64) -> MatrixSpace:
    """Image of sl(n) acting on degree d*n monomials in x_1..x_n by
    rho(E_ij) x^e = e_j * x^e * x_i / x_j."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    N = sl_monomial_module_dim(n, d)
    if N > guard:
        raise ValueError("module dimension %d exceeds guard %d" % (N, guard))
    mons = _degree_monomials(n, d * n)
    index = {mon: t for t, mon in enumerate(mons)}

    def rho_unit(i, j):
        rows = [[QQ.zero] * N for _ in range(N)]
        for t, e in enumerate(mons):
            if e[j] == 0:
                continue
            tgt = list(e)
            tgt[j] -= 1
            tgt[i] += 1
            rows[index[tuple(tgt)]][t] = QQ.coerce(e[j])
        return Matrix(QQ, rows)

    mats = [rho_unit(i, j) for i in range(n) for j in range(n) if i != j]
    for i in range(n - 1):
        # rho(E_ii - E_(i+1)(i+1)) is diagonal with entries e_i - e_(i+1)
        rows = [[QQ.zero] * N for _ in range(N)]
        for t, e in enumerate(mons):
            rows[t][t] = QQ.coerce(e[i] - e[i + 1])
        mats.append(Matrix(QQ, rows))
    return MatrixSpace(mats)


def sl_monomial_cartan(n: int, d: int) -> MatrixSpace:
    """The diagonal Cartan images rho(E_ii - E_(i+1)(i+1)), i = 1..n-1."""
    N = sl_monomial_module_dim(n, d)
    mons = _degree_monomials(n, d * n)
    mats = []
    for i in range(n - 1):
        rows = [[QQ.zero] * N for _ in range(N)]
        for t, e in enumerate(mons):
            rows[t][t] = QQ.coerce(e[i] - e[i + 1])
        mats.append(Matrix(QQ, rows))
    return MatrixSpace(mats)


def random_alternating_family(n: int, seed: int):
    """n alternating n x n matrices with entries in [-3, 3], seeded."""
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        rows = [[QQ.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = QQ.coerce(rng.randint(-3, 3))
                rows[i][j] = v
                rows[j][i] = -v
        out.append(Matrix(QQ, rows))
    return out


FAMILY_NAMES = ("lambda", "sl-standard", "sl-monomial", "adjoint",
                "heisenberg", "strict-upper", "borel-sl2", "example2-random",
                "middle-trivial")

_ADJOINT_SHORTHAND = {
    "sl2": lambda: sl2_basis_hef(),
    "sl3": lambda: sl_standard(3),
    "so3": lambda: lambda_space(3),
}


def make_example(family: str, params, seed: int = 0) -> MatrixSpace:
    """Dispatch a family name + integer params to a MatrixSpace."""
    from .kernelcert import example2_space
    if family == "lambda":
        return lambda_space(int(params[0]))
    if family == "sl-standard":
        return sl_standard(int(params[0]))
    if family == "sl-monomial":
        return sl_monomial_rep(int(params[0]), int(params[1]))
    if family == "heisenberg":
        return heisenberg(int(params[0]) if params else 3)
    if family == "strict-upper":
        return strict_upper_line()
    if family == "borel-sl2":
        return borel_sl2()
    if family == "middle-trivial":
        return middle_trivial_fixture()
    if family == "example2-random":
        n = int(params[0]) if params else 4
        return example2_space(random_alternating_family(n, seed))
    if family == "adjoint":
        if not params:
            raise ValueError("adjoint needs a base family, e.g. 'adjoint sl2'")
        base = str(params[0])
        if base in _ADJOINT_SHORTHAND:
            return adjoint_of(_ADJOINT_SHORTHAND[base]())
        return adjoint_of(make_example(base, params[1:], seed))
    raise ValueError("unknown family %r (choose from %s)" % (family, ", ".join(FAMILY_NAMES)))
