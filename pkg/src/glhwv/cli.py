"""Command-line interface: ``glhwv <subcommand> ...``.

Exit codes: 0 pass, 1 failed mathematical check, 2 inconclusive (degree cap),
3 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import nilcone
from .invariants import fundamental_invariants
from .reports import EXIT_PASS, EXIT_USAGE, Report, Timer, polynomial_certificate, scalar_certificate
from .ring import RingContext, format_polynomial, parse_polynomial
from .semiinvariants import u_basic, v_basic, verify_semiinvariant
from .validation import check_n, check_t, parse_index_list, parse_weight


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _weight_arg(text):
    try:
        return parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _index_arg(text):
    try:
        return parse_index_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--char", type=int, default=0, metavar="P", help="0 (rationals) or a prime")
    common.add_argument("--max-degree", type=int, default=None, help="degree safety cap for generation checks")
    common.add_argument("--seed", type=int, default=0, help="seed for every randomized choice")
    common.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")

    parser = _Parser(prog="glhwv", description="Highest weight vectors in k[gl_n] under conjugation.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("invariants", parents=[common], help="print s_1..s_n")
    p.add_argument("--n", type=int, required=True)

    hwv = sub.add_parser("hwv", help="build or verify semi-invariants")
    hsub = hwv.add_subparsers(dest="action", parser_class=_Parser)
    hsub.required = True
    p = hsub.add_parser("build", parents=[common], help="print u_{t,I} or v_{t,I}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--set", type=_index_arg, required=True, dest="index_set")
    p.add_argument("--family", choices=["u", "v"], default="u")
    p = hsub.add_parser("verify", parents=[common], help="check a polynomial file for B-semi-invariance")
    p.add_argument("--file", type=Path, required=True)
    p.add_argument("--lambda", type=_weight_arg, required=True, dest="weight")

    p = sub.add_parser("delta", parents=[common], help="evaluation matrix v_{t,I}(A_sigma(J))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--completion", choices=["largest", "random"], default="largest")

    p = sub.add_parser("basis", parents=[common], help="basis test for the u or v family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--family", choices=["u", "v"], default="u")

    p = sub.add_parser("jacobian", parents=[common], help="Jacobian minor certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("gl3", parents=[common], help="GL_3 checks")
    p.add_argument("--cap", type=int, default=6, help="weights l1 w1 + l2 w2 with l1 + l2 <= cap")

    p = sub.add_parser("scan", parents=[common], help="quotient dimension for r * lambda^t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=["auto", "linear_algebra", "counting"], default="auto")

    p = sub.add_parser("question", parents=[common], help="tensor candidates for a weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", type=_weight_arg, required=True, dest="weight")
    p.add_argument("--tuple-cap", type=int, default=None)
    return parser


def _inputs(args) -> dict:
    skip = {"out"}
    return {k: (list(v) if isinstance(v, tuple) else str(v) if isinstance(v, Path) else v) for k, v in vars(args).items() if k not in skip}


# -- handlers ---------------------------------------------------------------


def _cmd_invariants(args):
    ctx = RingContext(check_n(args.n), args.char)
    lines = [f"s{i} = {format_polynomial(s)}" for i, s in enumerate(fundamental_invariants(ctx), start=1)]
    return "\n".join(lines) + "\n", EXIT_PASS


def _cmd_hwv_build(args):
    n = check_n(args.n)
    t = check_t(n, args.t)
    ctx = RingContext(n, args.char)
    build = u_basic if args.family == "u" else v_basic
    cand = build(ctx, t, args.index_set)
    return format_polynomial(cand.poly.sign_normalized()) + "\n", EXIT_PASS


def _cmd_hwv_verify(args, report):
    weight = args.weight
    ctx = RingContext(check_n(len(weight)), args.char)
    try:
        text = args.file.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    f = parse_polynomial(ctx, text)
    cert = verify_semiinvariant(f, weight)
    report.results = {"ok": cert.ok, "torus_weight": cert.weight, "failing_root": cert.failing_root, "reason": cert.reason}
    report.certificates.append(polynomial_certificate("input", f))
    if cert.residual is not None:
        report.certificates.append(polynomial_certificate("residual", cert.residual))
    report.verdict = cert.ok


def _cmd_delta(args, report):
    cert = nilcone.delta_evaluation_matrix(args.n, args.t, args.completion, args.seed)
    report.results = {
        "index_sets": cert.index_sets,
        "matrix": cert.matrix,
        "diagonal_units": cert.diagonal_units,
        "off_diagonal_zero": cert.off_diagonal_zero,
        "rank": cert.rank,
    }
    report.certificates.append(scalar_certificate("diagonal", [cert.matrix[i][i] for i in range(len(cert.matrix))]))
    report.verdict = cert.ok


def _generation_into(report, rep, merge=True):
    if merge:
        report.results.update(rep.to_dict())
    report.per_degree_dims = {
        d: {"module": rep.module_dims[d], "relations": rep.relation_dims[d], "quotient": rep.quotient_dims.get(d, 0)}
        for d in sorted(rep.module_dims)
    }


def _cmd_basis(args, report):
    n = check_n(args.n)
    t = check_t(n, args.t)
    rep = nilcone.basis_report(n, t, args.family, args.char, args.max_degree)
    _generation_into(report, rep)
    weight, cands = nilcone.family_candidates(n, t, args.family, args.char)
    for c in cands:
        report.certificates.append(polynomial_certificate(f"{args.family}_{t},{{{','.join(map(str, c.provenance[2]))}}}", c.poly))
    if rep.verdict is None:
        report.verdict = None
    else:
        report.verdict = bool(rep.verdict) and rep.candidate_count == rep.target


def _cmd_jacobian(args, report):
    value = nilcone.jacobian_minor_certificate(args.n, args.t)
    report.results = {"determinant": value}
    report.certificates.append(scalar_certificate("det M_alpha(A_sigma)", value))
    report.verdict = abs(value) == 1


def _cmd_gl3(args, report):
    if args.char:
        raise UsageError("gl3 runs over the rationals; --char is not supported here")
    out = nilcone.gl3_suite(cap=args.cap, seed=args.seed)
    report.results = out
    g = nilcone.gl3_generators()
    for name in ("xi31", "m13", "d1", "d2"):
        report.certificates.append(polynomial_certificate(name, g[name]))
    report.verdict = out["ok"]


def _cmd_scan(args, report):
    rep = nilcone.scan_report(args.n, args.t, args.r, args.method, args.max_degree, args.char)
    report.results = rep.to_dict()
    report.per_degree_dims = {d: {"quotient": q} for d, q in sorted(rep.quotient_dims.items())}
    report.certificates.append(scalar_certificate("total", rep.total))
    if rep.total is None:
        report.verdict = None
    else:
        report.verdict = rep.total == rep.target


def _cmd_question(args, report):
    n = check_n(args.n)
    if len(args.weight) != n:
        raise UsageError(f"--lambda has {len(args.weight)} entries, expected {n}")
    rep = nilcone.question_experiment(n, args.weight, args.tuple_cap, args.char, args.max_degree)
    report.results = rep.to_dict()
    _generation_into(report, rep.generation, merge=False)
    report.verdict = rep.verdict


_JSON_HANDLERS = {
    "delta": _cmd_delta,
    "basis": _cmd_basis,
    "jacobian": _cmd_jacobian,
    "gl3": _cmd_gl3,
    "scan": _cmd_scan,
    "question": _cmd_question,
}


def dispatch(args) -> tuple:
    """Run one parsed command; returns (text output, exit code)."""
    if args.command == "invariants":
        return _cmd_invariants(args)
    if args.command == "hwv" and args.action == "build":
        return _cmd_hwv_build(args)
    report = Report(command=args.command if args.command != "hwv" else f"hwv {args.action}", inputs=_inputs(args))
    handler = _cmd_hwv_verify if args.command == "hwv" else _JSON_HANDLERS[args.command]
    with Timer() as clock:
        handler(args, report)
    report.timing = {"wall_seconds": round(clock.seconds, 6)}
    return report.to_json() + "\n", report.exit_code()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
