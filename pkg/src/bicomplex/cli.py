"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a check failed (or the requested
value does not exist, e.g. an inverse of a zero divisor), 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import algebras, linalg, ring
from .core import (
    Bicomplex, NotInvertible, ToleranceConfig, conj, format_basis, format_complex,
    format_idempotent, inverse, is_zero, is_zero_divisor, norm_d,
)
from .parse import BicomplexSyntaxError, parse_bicomplex, parse_complex
from .report import Report, to_jsonable

DEMOS = (
    "ker-not-maximal",
    "invertible-in-ideal",
    "sigma-p-not-in-ap",
    "spectrum-unbounded",
    "invariant-subspace",
    "maximal-ideal-forms",
    "not-division-algebra",
)


class InputError(Exception):
    pass


def _common(p):
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol-zero", type=float, default=None)
    p.add_argument("--tol-eig", type=float, default=None)
    p.add_argument("--idempotent", action="store_true",
                   help="print bicomplex values as [z1; z2]")


def build_parser():
    parser = argparse.ArgumentParser(prog="bicomplex",
                                     description="Bicomplex arithmetic, ideals and operator spectra.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate a bicomplex expression")
    p.add_argument("expr", nargs="?", default="-")
    _common(p)

    p = sub.add_parser("decompose", help="idempotent coordinates of a value or matrix")
    p.add_argument("expr", nargs="?")
    p.add_argument("--matrix")
    _common(p)

    p = sub.add_parser("conj", help="apply one of the three conjugations")
    p.add_argument("expr")
    p.add_argument("--kind", choices=("1", "2", "3"), default="3")
    _common(p)

    p = sub.add_parser("inverse", help="multiplicative inverse")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("norm", help="hyperbolic norm of a value, or operator norm of a matrix")
    p.add_argument("expr", nargs="?")
    p.add_argument("--matrix")
    _common(p)

    for verb in ("spectrum", "apspectrum"):
        p = sub.add_parser(verb, help=("point" if verb == "spectrum" else "approximate point") + " spectrum")
        p.add_argument("--matrix", required=True)
        p.add_argument("--lambda", dest="lam", help="also test membership of this value")
        _common(p)

    p = sub.add_parser("kernel", help="basis of ker(T - lambda I)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    _common(p)

    p = sub.add_parser("ideal-check", help="membership in an ideal of BC, or analysis of an IdealSpec")
    p.add_argument("expr", nargs="?")
    p.add_argument("--ideal", required=True,
                   help="zero|I1|I2|full, or IdealSpec JSON such as '{\"Z1\":[1],\"Z2\":[]}'")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--points", help="comma-separated point names of X")
    _common(p)

    p = sub.add_parser("maximal-ideals", help="maximal ideals of BC^n or C(X, BC)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--points")
    p.add_argument("--oracle", action="store_true", help="compare with the exhaustive oracle")
    _common(p)

    p = sub.add_parser("demo", help="run a machine-checked counterexample")
    p.add_argument("name", choices=DEMOS)
    p.add_argument("--matrix")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--element", help="element for invertible-in-ideal / spectrum-unbounded")
    p.add_argument("--side", choices=("e1", "e2"), default="e1")
    _common(p)
    return parser


# --------------------------------------------------------------------------


def _tol(args):
    base = ToleranceConfig()
    try:
        return ToleranceConfig(
            tau_zero=args.tol_zero if args.tol_zero is not None else base.tau_zero,
            tau_eig=args.tol_eig if args.tol_eig is not None else base.tau_eig,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_expr(expr, stdin):
    if expr is None:
        raise InputError("an expression is required")
    if expr == "-":
        expr = stdin.read().strip()
    return expr


def _fmt(Z, args):
    return format_idempotent(Z) if args.idempotent else format_basis(Z)


def _load_matrix(path):
    try:
        return linalg.BCMatrix.load(path)
    except OSError as exc:
        raise InputError(f"cannot read matrix file {path}: {exc.strerror}") from None
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"bad matrix file {path}: {exc}") from None


def _classify(Z, tol):
    if is_zero(Z, tol):
        return "zero"
    if is_zero_divisor(Z, tol):
        return "zero divisor"
    return "invertible"


def _value(Z, args, tol):
    return {"value": _fmt(Z, args), "json": Z.to_json(),
            "idempotent": [format_complex(Z.z1), format_complex(Z.z2)],
            "class": _classify(Z, tol)}


def _algebra(args):
    if args.points:
        return algebras.FnAlgebra([p.strip() for p in args.points.split(",") if p.strip()])
    if args.n is None:
        raise InputError("--n or --points is required")
    if args.n < 1:
        raise InputError("--n must be >= 1")
    return algebras.PointwiseAlgebra(args.n)


def cmd_eval(args, stdin, tol):
    Z = parse_bicomplex(_read_expr(args.expr, stdin))
    return 0, _value(Z, args, tol), _fmt(Z, args)


def cmd_decompose(args, stdin, tol):
    if args.matrix:
        T = _load_matrix(args.matrix)
        T1, T2 = linalg.decompose_operator(T)
        data = {"T1": to_jsonable(T1), "T2": to_jsonable(T2)}
        text = f"T1 =\n{np.array2string(T1)}\nT2 =\n{np.array2string(T2)}"
        return 0, data, text
    Z = parse_bicomplex(_read_expr(args.expr, stdin))
    data = {"z1": [Z.z1.real, Z.z1.imag], "z2": [Z.z2.real, Z.z2.imag]}
    return 0, data, f"e1*({format_complex(Z.z1)}) + e2*({format_complex(Z.z2)})"


def cmd_conj(args, stdin, tol):
    Z = conj(parse_bicomplex(_read_expr(args.expr, stdin)), int(args.kind))
    return 0, _value(Z, args, tol), _fmt(Z, args)


def cmd_inverse(args, stdin, tol):
    Z = parse_bicomplex(_read_expr(args.expr, stdin))
    try:
        W = inverse(Z, tol)
    except NotInvertible as exc:
        data = {"error": "not invertible", "zero_divisor": exc.zero_divisor, "input": _fmt(Z, args)}
        kind = "zero divisor" if exc.zero_divisor else "zero"
        return 1, data, f"{_fmt(Z, args)} is not invertible ({kind})"
    return 0, _value(W, args, tol), _fmt(W, args)


def cmd_norm(args, stdin, tol):
    if args.matrix:
        h = linalg.operator_norm_d(_load_matrix(args.matrix))
    else:
        h = norm_d(parse_bicomplex(_read_expr(args.expr, stdin)))
    return 0, h.to_json(), f"e1*{h.a1!r} + e2*{h.a2!r}"


def _cmd_spectrum(args, tol, kind):
    T = _load_matrix(args.matrix)
    S = linalg.point_spectrum(T, tol) if kind == "point" else linalg.approx_point_spectrum(T, tol)
    data = S.to_json()
    text = S.describe()
    if args.lam:
        lam = parse_bicomplex(args.lam)
        member = S.contains(lam)
        data = {"spectrum": data, "lambda": lam.to_json(), "member": member}
        text += f"\n{_fmt(lam, args)} is {'a member' if member else 'not a member'}"
    return 0, data, text


def cmd_spectrum(args, stdin, tol):
    return _cmd_spectrum(args, tol, "point")


def cmd_apspectrum(args, stdin, tol):
    return _cmd_spectrum(args, tol, "ap")


def cmd_kernel(args, stdin, tol):
    T = _load_matrix(args.matrix)
    lam = parse_bicomplex(args.lam)
    basis = linalg.kernel_bc(T, lam, tol)
    data = {"lambda": lam.to_json(), "dimension": len(basis), "basis": [v.to_json() for v in basis]}
    lines = [f"ker(T - lambda I) has {len(basis)} basis vectors"]
    for v in basis:
        lines.append("  (" + ", ".join(_fmt(e, args) for e in v.entries()) + ")")
    return 0, data, "\n".join(lines)


def cmd_ideal_check(args, stdin, tol):
    names = {k.value.lower(): k for k in ring.BCIdeal}
    key = args.ideal.strip()
    if key.lower() in names:
        ideal = names[key.lower()]
        Z = parse_bicomplex(_read_expr(args.expr, stdin))
        member = ring.in_ideal(Z, ideal, tol)
        data = {"ideal": ideal.value, "element": Z.to_json(), "member": member,
                "proper": ideal.proper,
                "maximal": ideal in (ring.BCIdeal.I1, ring.BCIdeal.I2)}
        if ideal in (ring.BCIdeal.I1, ring.BCIdeal.I2):
            rep = ring.quotient_rep(Z, ideal)
            data["coset_representative"] = [rep.real, rep.imag]
        return 0, data, f"{_fmt(Z, args)} {'is' if member else 'is not'} in {ideal.value}"
    try:
        spec_obj = json.loads(key)
    except json.JSONDecodeError as exc:
        raise InputError(f"--ideal is neither an ideal name nor JSON: {exc}") from None
    A = _algebra(args)
    try:
        I = algebras.IdealSpec.from_json(spec_obj, A.n)
    except (ValueError, TypeError, AttributeError) as exc:
        raise InputError(f"bad IdealSpec: {exc}") from None
    rng = np.random.default_rng(args.seed)
    closed = algebras.check_ideal_closure(A, I, samples=100, rng=rng, tol=tol)
    maximal = algebras.is_maximal(A, I) if I.proper else False
    data = {"algebra": A.to_json(), "ideal": I.to_json(), "is_ideal": closed,
            "proper": I.proper, "maximal": maximal, "form": I.theorem_form()}
    text = (f"{json.dumps(I.to_json())} in {A!r}: ideal={closed} proper={I.proper} "
            f"maximal={maximal} form={I.theorem_form()}")
    return (0 if closed else 1), data, text


def cmd_maximal_ideals(args, stdin, tol):
    A = _algebra(args)
    found = algebras.maximal_ideals(A)
    data = {"algebra": A.to_json(), "maximal_ideals": [I.to_json() for I in found]}
    lines = [f"{len(found)} maximal ideals of {A!r}"]
    lines += [f"  {json.dumps(I.to_json())}  ({I.theorem_form()})" for I in found]
    code = 0
    if args.oracle:
        if A.n > 4:
            raise InputError("the oracle supports n <= 4")
        oracle = algebras.brute_force_maximal_oracle(A.n)
        agree = {I.key() for I in found} == {I.key() for I in oracle}
        data["oracle_agrees"] = agree
        lines.append(f"oracle agrees: {agree}")
        code = 0 if agree else 1
    return code, data, "\n".join(lines)


def _demo_report(args, tol):
    rng = np.random.default_rng(args.seed)
    name = args.name
    if name == "ker-not-maximal":
        return ring.kernel_not_maximal_demo(tol)
    if name == "invertible-in-ideal":
        if args.element:
            Z = parse_bicomplex(args.element)
        else:
            z1 = complex(*rng.standard_normal(2))
            Z = Bicomplex.from_idempotent(z1, 0)
        try:
            return ring.invertible_inside_ideal_demo(Z, tol)[1]
        except (ValueError, ring.ZeroComponent) as exc:
            raise InputError(str(exc)) from None
    if name in ("sigma-p-not-in-ap", "invariant-subspace"):
        if args.matrix:
            T = _load_matrix(args.matrix)
        else:
            T = linalg.BCMatrix.random(args.n or 3, rng)
        if name == "sigma-p-not-in-ap":
            rep = linalg.sigma_p_not_in_ap_demo(T, tol)
        else:
            rep = Report(claim="e1 V and e2 V are invariant under every BC-linear operator",
                         witnesses=[{"matrix": T}])
            for which in ("e1", "e2"):
                res = linalg.invariant_subspace_residual(T, which, samples=32, rng=rng)
                rep.check(f"T({which} V) in {which} V", res < 1e-12, res)
        return rep
    if name == "spectrum-unbounded":
        a = parse_complex(args.element) if args.element else complex(*rng.standard_normal(2))
        return algebras.spectrum_unbounded_demo(algebras.DivisionAlgebraElem(args.side, a), tol=tol)
    if name == "maximal-ideal-forms":
        n = args.n or 2
        if not 1 <= n <= 4:
            raise InputError("maximal-ideal-forms needs 1 <= n <= 4")
        return algebras.maximal_ideal_forms_demo(n, rng=rng, tol=tol)
    n = args.n or 2
    if n < 1:
        raise InputError("--n must be >= 1")
    return algebras.not_division_algebra_witness(n, tol)


def cmd_demo(args, stdin, tol):
    rep = _demo_report(args, tol)
    return (0 if rep.passed else 1), rep.to_json(), rep.render_text()


COMMANDS = {
    "eval": cmd_eval,
    "decompose": cmd_decompose,
    "conj": cmd_conj,
    "inverse": cmd_inverse,
    "norm": cmd_norm,
    "spectrum": cmd_spectrum,
    "apspectrum": cmd_apspectrum,
    "kernel": cmd_kernel,
    "ideal-check": cmd_ideal_check,
    "maximal-ideals": cmd_maximal_ideals,
    "demo": cmd_demo,
}


def run(argv, stdin=None, stdout=None, stderr=None):
    """Execute one command; returns the exit code."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tol = _tol(args)
        code, data, text = COMMANDS[args.verb](args, stdin, tol)
    except BicomplexSyntaxError as exc:
        print(f"error: {exc.pretty()}", file=stderr)
        return 2
    except linalg.ConvergenceFailure as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (InputError, algebras.PointNotInX) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if args.output == "json":
        stdout.write(json.dumps(to_jsonable(data), indent=2) + "\n")
    else:
        stdout.write(text + "\n")
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
