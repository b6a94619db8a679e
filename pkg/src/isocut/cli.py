"""Command-line entry point.

Exit codes: 0 success, 1 property violation or failed audit, 2 input error,
3 exact-solver budget refusal.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import io
from .exact import DEFAULT_BUDGET, BudgetExceeded, solve_exact
from .generators import random_instance, tight_instance
from .graph import InputError
from .isolating import iso_union_approx
from .stability import PerturbationSpec, apply_perturbation, stability_factor
from .verify import SweepParams, sweep, sweep_ok, verify_theorem1, verify_theorem2

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("isocut")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def rational(text: str) -> Fraction:
    try:
        return io.parse_rational(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="isocut", description="Isolating cuts, exact k-terminal cuts and stability audits.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file")
    p.add_argument("--method", choices=["iso", "exact"], default="exact")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("stability", help="exact stability factor of an instance")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("generate", help="write an instance")
    gen = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    g = gen.add_parser("tight", help="the tight family G_k(eps)")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--eps", type=rational, required=True)
    g.add_argument("-o", "--output")
    g = gen.add_parser("random", help="seeded random graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--prob", type=rational, default=Fraction(1, 2))
    g.add_argument("--wmin", type=rational, default=Fraction(1))
    g.add_argument("--wmax", type=rational, default=Fraction(10))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")

    p = sub.add_parser("perturb", help="apply a gamma-perturbation")
    p.add_argument("file")
    p.add_argument("--gamma", type=rational, required=True)
    p.add_argument("--mode", choices=["worst", "random"], default="worst")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="theorem audits")
    ver = p.add_subparsers(dest="theorem", required=True, parser_class=_Parser)
    v = ver.add_parser("theorem1", help="isolating source sets equal optimal ones on (k-1)-stable input")
    v.add_argument("file")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v = ver.add_parser("theorem2", help="audit the tight construction G_k(eps)")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--eps", type=rational, required=True)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("sweep", help="audit many random instances")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--n", type=int, nargs="+", default=[6, 7, 8])
    p.add_argument("--k", type=int, nargs="+", default=[3, 4])
    p.add_argument("--prob", type=rational, default=Fraction(1, 2))
    p.add_argument("--wmin", type=rational, default=Fraction(1))
    p.add_argument("--wmax", type=rational, default=Fraction(10))
    p.add_argument("--max-free", type=int, help="skip n with n - k above this")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _emit_instance(inst, output) -> None:
    if output:
        io.write_instance(inst, output)
        log.info("wrote %s", output)
    else:
        sys.stdout.write(io.serialize_instance(inst))


def _run(args) -> int:
    out = sys.stdout.write
    if args.command == "solve":
        inst = io.read_instance(args.file)
        if args.method == "exact":
            out(io.dumps(io.build_report(exact=solve_exact(inst, args.budget))))
        else:
            out(io.dumps(io.build_report(iso=iso_union_approx(inst))))
        return EXIT_OK

    if args.command == "stability":
        inst = io.read_instance(args.file)
        out(io.dumps(io.build_report(stability=stability_factor(inst, args.budget))))
        return EXIT_OK

    if args.command == "generate":
        if args.family == "tight":
            inst = tight_instance(args.k, args.eps)
        else:
            inst = random_instance(args.n, args.k, args.prob, (args.wmin, args.wmax), args.seed)
        _emit_instance(inst, args.output)
        return EXIT_OK

    if args.command == "perturb":
        inst = io.read_instance(args.file)
        if args.gamma <= 1:
            raise InputError("gamma must exceed 1")
        if args.mode == "worst":
            spec = PerturbationSpec.worst_case(inst, args.gamma, args.budget)
        else:
            spec = PerturbationSpec.random(inst, args.gamma, args.seed)
        _emit_instance(apply_perturbation(inst, spec), args.output)
        return EXIT_OK

    if args.command == "verify":
        if args.theorem == "theorem1":
            audit = verify_theorem1(io.read_instance(args.file), args.budget)
        else:
            audit = verify_theorem2(args.k, args.eps, args.budget)
        out(io.dumps(audit.to_doc()))
        if audit.error is not None:
            return EXIT_INPUT
        return EXIT_OK if audit.passed else EXIT_VIOLATION

    if args.command == "sweep":
        params = SweepParams(tuple(args.n), tuple(args.k), args.prob, (args.wmin, args.wmax), args.max_free)
        report = sweep(args.count, params, args.budget, args.seed, args.jobs)
        out(io.dumps(report))
        return EXIT_OK if sweep_ok(report) else EXIT_VIOLATION

    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _run(args)
    except BudgetExceeded as exc:
        log.error("%s", exc)
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
