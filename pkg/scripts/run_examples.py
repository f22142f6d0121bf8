#!/usr/bin/env python3
"""Run the full analysis pipeline over the built-in example families and
print a summary table: verdicts, Cartan dimensions, max ranks, shrunk
decisions, and degree-1 certificates."""

import argparse
import time

from liesdit.liealg import closure_check, is_semisimple, structure_constants
from liesdit.sdit import sdit_decide, semisimple_max_rank
from liesdit.shrunk import has_shrunk_subspace
from liesdit.kernelcert import find_kernel_certificate, verify_certificate
from liesdit.families import (adjoint_of, heisenberg, lambda_space,
                              middle_trivial_fixture, sl2_basis_hef,
                              sl_monomial_rep, sl_standard,
                              strict_upper_line)


def examples():
    yield "lambda(2)", lambda_space(2)
    yield "lambda(3)", lambda_space(3)
    yield "lambda(4)", lambda_space(4)
    yield "lambda(5)", lambda_space(5)
    yield "lambda(6)", lambda_space(6)
    yield "sl(2) standard", sl2_basis_hef()
    yield "sl(3) standard", sl_standard(3)
    yield "sl(2) adjoint", adjoint_of(sl2_basis_hef())
    yield "sl(3) adjoint", adjoint_of(sl_standard(3))
    yield "so(3) adjoint", adjoint_of(lambda_space(3))
    yield "sl(2) monomial d=1", sl_monomial_rep(2, 1)
    yield "sl(2) monomial d=2", sl_monomial_rep(2, 2)
    yield "sl(3) monomial d=1", sl_monomial_rep(3, 1)
    yield "heisenberg", heisenberg()
    yield "strict upper line", strict_upper_line()
    yield "middle-trivial", middle_trivial_fixture()


def analyze(name, S):
    t0 = time.monotonic()
    assert closure_check(S) is None, name
    L = structure_constants(S)
    verdict = sdit_decide(S)
    row = {
        "name": name,
        "n": S.n,
        "dim": S.dim,
        "verdict": verdict.verdict,
        "cartan": verdict.cartan.subalgebra.dim,
        "mrk": "-",
        "shrunk": has_shrunk_subspace(S)[0],
        "cert": "-",
    }
    if is_semisimple(L):
        row["mrk"] = str(semisimple_max_rank(S))
    cert = find_kernel_certificate(S, d=1, side="right")
    if cert is None:
        cert = find_kernel_certificate(S, d=1, side="left")
    if cert is not None:
        assert verify_certificate(S, cert)
        row["cert"] = "d=1 %s" % cert.side
    row["ms"] = int((time.monotonic() - t0) * 1000)
    return row


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.parse_args()
    header = ("example", "n", "dim", "verdict", "cartan", "mrk", "shrunk", "cert", "ms")
    rows = [analyze(name, S) for name, S in examples()]
    widths = [max(len(str(h)), *(len(str(r[k])) for r in rows))
              for h, k in zip(header, ("name", "n", "dim", "verdict", "cartan",
                                       "mrk", "shrunk", "cert", "ms"))]
    fmt = "  ".join("%%-%ds" % w for w in widths)
    print(fmt % header)
    print(fmt % tuple("-" * w for w in widths))
    for r in rows:
        print(fmt % (r["name"], r["n"], r["dim"], r["verdict"], r["cartan"],
                     r["mrk"], r["shrunk"], r["cert"], r["ms"]))


if __name__ == "__main__":
    main()
