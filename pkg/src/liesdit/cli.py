"""Command-line front end.

Every command reads a SpaceFile (path or '-' for stdin), emits a JSON report
on stdout, and exits 0 when decided, 2 when undetermined, 1 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .fields import QQ
from .linalg import EnumerationGuardError
from .liealg import closure_check, structure_constants
from .cartan import CartanConfig, cartan_as_matrix_space, cartan_subalgebra
from .sdit import (NotLieAlgebraError, NotSemisimpleError,
                   UnsupportedSpectrumError, sdit_decide, semisimple_max_rank,
                   singular_via_weights, weights)
from .shrunk import (composition_series, has_shrunk_subspace, ncrk_bruteforce,
                     reduce_mod_p)
from .kernelcert import find_kernel_certificate, verify_certificate
from .families import make_example
from .spacefile import SpaceFileError, format_entry, parse_space, write_space

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDETERMINED = 2


def _read_space(args):
    if args.space == "-":
        text = sys.stdin.read()
    else:
        with open(args.space, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_space(text, lenient=args.lenient)


def _matrix_json(M):
    return [[format_entry(x) for x in row] for row in M.entries]


def _subspace_json(U):
    return [[format_entry(x) for x in row] for row in U.basis]


def _emit(report, started):
    report["timing_ms"] = round((time.monotonic() - started) * 1000.0, 3)
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cartan_config(args):
    omega = None
    if getattr(args, "omega_size", None):
        omega = tuple(range(args.omega_size))
    return CartanConfig(omega=omega)


def cmd_check(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    bad = closure_check(S)
    report = {"command": "check", "closed": bad is None, "warnings": warns}
    if bad is not None:
        report["counterexample"] = {"i": bad[0], "j": bad[1]}
    _emit(report, started)
    return EXIT_OK


def cmd_sdit(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    v = sdit_decide(S, _cartan_config(args))
    report = {"command": "sdit", "verdict": v.verdict,
              "max_rank_over_hits": v.max_rank_over_hits,
              "cartan_dim": v.cartan.subalgebra.dim,
              "warnings": warns}
    if v.witness is not None:
        report["witness_point"] = [format_entry(x) for x in v.witness[0]]
        report["witness_rank"] = v.witness[1]
    _emit(report, started)
    return EXIT_OK


def cmd_maxrank(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    mrk = semisimple_max_rank(S, _cartan_config(args))
    _emit({"command": "maxrank", "max_rank": mrk, "n": S.n, "warnings": warns}, started)
    return EXIT_OK


def cmd_cartan(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    bad = closure_check(S)
    if bad is not None:
        raise NotLieAlgebraError(bad)
    L = structure_constants(S)
    res = cartan_subalgebra(L, _cartan_config(args))
    C = cartan_as_matrix_space(L, res.subalgebra)
    report = {
        "command": "cartan",
        "dim": res.subalgebra.dim,
        "verified": res.verified,
        "regular_element": [format_entry(x) for x in res.regular_element],
        "basis": [_matrix_json(M) for M in C.basis],
        "descent_fitting_dims": [d for _, d in res.descent_trace],
        "warnings": warns,
    }
    _emit(report, started)
    return EXIT_OK


def cmd_weights(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    bad = closure_check(S)
    if bad is not None:
        raise NotLieAlgebraError(bad)
    L = structure_constants(S)
    res = cartan_subalgebra(L, _cartan_config(args))
    C = cartan_as_matrix_space(L, res.subalgebra)
    W = weights(S, C)
    report = {
        "command": "weights",
        "cartan_dim": C.dim,
        "weights": [{"weight": [format_entry(x) for x in w],
                     "multiplicity": mult} for w, mult, _ in W.weights],
        "verdict": singular_via_weights(W),
        "warnings": warns,
    }
    _emit(report, started)
    return EXIT_OK


def cmd_shrunk(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    answer, idx = has_shrunk_subspace(S)
    report = {"command": "shrunk", "answer": answer, "warnings": warns}
    if idx is not None:
        report["trivial_factor_index"] = idx
    _emit(report, started)
    return EXIT_UNDETERMINED if answer == "undetermined" else EXIT_OK


def cmd_ncrk_bf(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    p = {"gf2": 2, "gf3": 3}[args.field]
    if S.field == QQ:
        S = reduce_mod_p(S, p)
    elif S.field.characteristic != p:
        raise SpaceFileError("space is over %s, not GF(%d)" % (S.field, p))
    rep = ncrk_bruteforce(S, guard=args.guard_subspaces)
    report = {
        "command": "ncrk-bf",
        "field": "GF(%d)" % p,
        "ncrk": rep.ncrk,
        "max_deficit": rep.max_deficit,
        "canonical_lower": _subspace_json(rep.canonical_lower),
        "canonical_upper": _subspace_json(rep.canonical_upper),
        "max_deficit_subspace_count": rep.all_max_deficit_count,
        "warnings": warns,
    }
    _emit(report, started)
    return EXIT_OK


def cmd_compseries(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    series = composition_series(S)
    factors = []
    undetermined = False
    for f in series.factors:
        abs_irr = f.absolutely_irreducible
        if abs_irr != True:  # noqa: E712 -- may be the string "undetermined"
            undetermined = True
        factors.append({"dimension": f.dimension,
                        "trivial": f.trivial,
                        "absolutely_irreducible": abs_irr if abs_irr is True else "undetermined",
                        "block_dim": f.block.dim})
    report = {
        "command": "compseries",
        "chain_dims": [V.dim for V in series.chain],
        "factors": factors,
        "warnings": warns,
    }
    _emit(report, started)
    return EXIT_UNDETERMINED if undetermined else EXIT_OK


def cmd_linker(args):
    started = time.monotonic()
    S, meta, warns = _read_space(args)
    side = {"l": "left", "r": "right", "left": "left", "right": "right"}[args.side]
    cert = find_kernel_certificate(S, d=args.degree, side=side)
    report = {"command": "linker", "degree": args.degree, "side": side,
              "found": cert is not None, "warnings": warns}
    if cert is not None:
        report["verified"] = verify_certificate(S, cert)
        report["coefficients"] = {
            "".join(str(e) for e in mon): [format_entry(x) for x in vec]
            for mon, vec in sorted(cert.coeffs.items(), reverse=True)
            if any(x for x in vec)}
    _emit(report, started)
    return EXIT_OK


def cmd_gen(args):
    S = make_example(args.family, args.params, seed=args.seed)
    meta = {"family": args.family, "params": args.params}
    if args.family == "example2-random":
        meta["seed"] = args.seed
    text = write_space(S, metadata=meta)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_space_arg(p):
    p.add_argument("space", nargs="?", default="-",
                   help="SpaceFile path, or '-' for stdin (default)")
    p.add_argument("--lenient", action="store_true",
                   help="normalize non-canonical entries instead of rejecting")
    p.add_argument("--omega-size", type=int, default=None,
                   help="size of the Cartan descent trial set")


def build_parser():
    p = argparse.ArgumentParser(prog="liesdit",
                                description="Exact SDIT and structure analysis "
                                            "of matrix Lie algebras")
    sub = p.add_subparsers(dest="cmd", required=True)

    for name, fn, doc in (
            ("check", cmd_check, "closure under the commutator bracket"),
            ("sdit", cmd_sdit, "singularity decision via Cartan + hitting set"),
            ("maxrank", cmd_maxrank, "maximum rank (semisimple inputs only)"),
            ("cartan", cmd_cartan, "Cartan subalgebra with verification"),
            ("weights", cmd_weights, "weight decomposition (rational spectra only)"),
            ("shrunk", cmd_shrunk, "shrunk-subspace existence via composition factors"),
            ("compseries", cmd_compseries, "composition series with certificates")):
        sp = sub.add_parser(name, help=doc)
        _add_space_arg(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("ncrk-bf", help="brute-force non-commutative rank over GF(p)")
    _add_space_arg(sp)
    sp.add_argument("--field", choices=("gf2", "gf3"), default="gf2")
    sp.add_argument("--guard-subspaces", type=int, default=10 ** 6)
    sp.set_defaults(fn=cmd_ncrk_bf)

    sp = sub.add_parser("linker", help="degree-d kernel-vector certificate search")
    _add_space_arg(sp)
    sp.add_argument("--degree", type=int, default=1)
    sp.add_argument("--side", choices=("l", "r", "left", "right"), default="r")
    sp.set_defaults(fn=cmd_linker)

    sp = sub.add_parser("gen", help="generate an example family SpaceFile")
    sp.add_argument("family")
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(fn=cmd_gen)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (SpaceFileError, FileNotFoundError) as e:
        _error("input-error", str(e))
        return EXIT_ERROR
    except NotLieAlgebraError as e:
        _error("not-lie-algebra", str(e))
        return EXIT_ERROR
    except NotSemisimpleError as e:
        _error("not-semisimple", str(e))
        return EXIT_ERROR
    except UnsupportedSpectrumError as e:
        _error("unsupported-spectrum", str(e))
        return EXIT_ERROR
    except EnumerationGuardError as e:
        _error("guard-exceeded", str(e))
        return EXIT_ERROR
    except ValueError as e:
        _error("invalid-input", str(e))
        return EXIT_ERROR


def _error(code, message):
    json.dump({"error": code, "message": message}, sys.stdout)
    sys.stdout.write("\n")


if __name__ == "__main__":
    sys.exit(main())
