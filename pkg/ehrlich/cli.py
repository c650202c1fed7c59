"""Command-line front end: ``python -m ehrlich <command> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from .config import SOLVER_CONFIG, default_digits
from .errors import EhrlichError, ParseError
from .experiments import (aberth_init, builtin_experiments, get_experiment, initial_certificate,
                          run_table, iterate_listing)
from .export import (export_trajectories, format_iterates_text, format_table_text, read_initial,
                     read_polynomial, write_report_json, write_table)
from .numerics.apcx import PrecisionContext, format_fixed, format_sci
from .numerics.metrics import GaugeParams, PNorm
from .numerics.solver import SolveConfig, certify_semilocal, solve

logger = logging.getLogger(__name__)

P_CHOICES = ('1', '2', 'inf')


def parse_rows(text: str) -> List[int]:
    """'1..10', '1,2,5' or '3'."""
    rows = []
    for part in text.split(','):
        part = part.strip()
        try:
            if '..' in part:
                lo, hi = part.split('..', 1)
                rows.extend(range(int(lo), int(hi) + 1))
            elif part:
                rows.append(int(part))
        except ValueError:
            raise ParseError(f"bad row range {part!r} in --rows {text!r}") from None
    return rows


def _problem(args, ctx: PrecisionContext):
    """(polynomial, start vector) from --experiment or --poly with --init/--aberth."""
    if args.experiment:
        exp = get_experiment(args.experiment)
        return exp.polynomial, exp.initial(ctx)
    if not args.poly:
        raise EhrlichError("give --experiment or --poly")
    f = read_polynomial(args.poly)
    if args.init:
        return f, ctx.vector(read_initial(args.init))
    if args.aberth:
        a1, r0 = args.aberth.split(',', 1)
        return f, aberth_init(f.degree, ctx.complex(a1), r0, ctx)
    raise EhrlichError("--poly needs --init or --aberth a1,r0")


def cmd_solve(args) -> int:
    cfg = SolveConfig.from_digits(args.digits, N=args.order, pnorm=args.p,
                                  stop_eps=args.stop_eps, max_iter=args.max_iter)
    f, x0 = _problem(args, cfg.context())
    report = solve(f, x0, cfg)
    places = SOLVER_CONFIG['table_digits']
    print(f"status={report.status} m={report.m} k={report.k_stop} order={report.order_claim}")
    if report.eps_k is not None:
        print(f"eps_k={format_sci(report.eps_k, places)}")
    if report.eps_k_plus_1 is not None:
        print(f"eps_k+1={format_sci(report.eps_k_plus_1, places)}")
    if report.failure is not None:
        print(f"failure: {report.failure.describe()}")
    if args.out:
        write_report_json(report, args.out)
    if args.trajectory:
        export_trajectories(report, args.trajectory)
    return 0 if report.converged else 1


def cmd_table(args) -> int:
    exp = get_experiment(args.experiment)
    rows = parse_rows(args.rows) if args.rows else None
    table = run_table(exp, rows, workers=args.workers, digits=args.digits, extended=args.extended)
    if args.out:
        write_table(table, args.out)
    else:
        print(format_table_text(table))
    return 0 if all(row.ok for row in table) else 1


def cmd_table2(args) -> int:
    text = format_iterates_text(iterate_listing(args.digits))
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as fh:
            fh.write(text + '\n')
    else:
        print(text)
    return 0


def cmd_certify(args) -> int:
    ctx = PrecisionContext.from_digits(args.digits, SOLVER_CONFIG['precision_headroom'])
    f, x = _problem(args, ctx)
    params = GaugeParams.build(f.degree, PNorm.parse(args.p), ctx)
    cert = certify_semilocal(f, x, params, ctx)
    places = SOLVER_CONFIG['table_digits']
    print(f"Ef={format_fixed(cert.Ef, places, truncate=True)} "
          f"threshold={format_fixed(cert.threshold, places)} certified={cert.certified}")
    if cert.eps is not None:
        print(f"eps={format_sci(cert.eps, places)}")
    return 0 if cert.certified else 1


def cmd_experiments(args) -> int:
    for exp in builtin_experiments():
        info = exp.to_json()
        cert = initial_certificate(exp, digits=50)
        print(f"{info['name']:6} n={info['degree']:<3} threshold={info['threshold']} "
              f"Ef(x0)={format_fixed(cert.Ef, SOLVER_CONFIG['table_digits'], truncate=True)}  "
              f"{info['title']}")
    if args.json:
        print(json.dumps([exp.to_json() for exp in builtin_experiments()], indent=2))
    return 0


def _add_problem_args(p: argparse.ArgumentParser):
    p.add_argument('--experiment', help='built-in experiment name or alias (ex71..ex74, quartic, wilkinson20, ...)')
    p.add_argument('--poly', help='polynomial JSON file')
    p.add_argument('--init', help='start vector file (JSON pairs or "re,im" lines)')
    p.add_argument('--aberth', help='Aberth start "a1,r0" for --poly')
    p.add_argument('--p', default='inf', choices=P_CHOICES)
    p.add_argument('--digits', type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='ehrlich', description='Certified high-order Ehrlich-type root finding')
    parser.add_argument('-v', '--verbose', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('solve', help='run the iteration with certification and stopping')
    _add_problem_args(p)
    p.add_argument('--order', type=int, default=1, help='N; the method has order 2N+1')
    p.add_argument('--stop-eps', default=SOLVER_CONFIG['stop_eps'])
    p.add_argument('--max-iter', type=int, default=SOLVER_CONFIG['max_iter'])
    p.add_argument('--out', help='report JSON path')
    p.add_argument('--trajectory', help='trajectory CSV path')
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser('table', help='reproduce a results table for an experiment')
    p.add_argument('--experiment', required=True)
    p.add_argument('--rows', help="e.g. '1..10' or '1,2,30'")
    p.add_argument('--extended', action='store_true', help='include the high-precision rows')
    p.add_argument('--digits', type=int, default=None, help='override the per-row precision plan')
    p.add_argument('--workers', type=int, default=None)
    p.add_argument('--out', help='.csv, .json or text file')
    p.set_defaults(func=cmd_table)

    p = sub.add_parser('table2', aliases=['iterates'],
                       help='iterates of ex71 under N=10, truncated to 15 decimals')
    p.add_argument('--digits', type=int, default=None)
    p.add_argument('--out')
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser('certify', help='E_f, threshold and error bound without iterating')
    _add_problem_args(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser('experiments', help='list the built-in experiments')
    p.add_argument('--json', action='store_true')
    p.set_defaults(func=cmd_experiments)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        if getattr(args, "digits", None) is None and args.command in ("solve", "certify"):
            args.digits = default_digits()
        return args.func(args)
    except EhrlichError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
