"""Command line interface: ``burgersnet run | suite | coupling-table``."""

from __future__ import annotations

import argparse
import json
import sys

from .coupling import resolve_node
from .scenario_io import ScenarioFormatError, load_scenario
from .simulate import MODELS, ScenarioError, run_scenario


def _summary(report) -> str:
    parts = [f"{report.scenario or '<unnamed>'}: model={report.model}"]
    for name, secs in report.wall_clock.items():
        parts.append(f"{name} {report.steps[name]} steps in {secs:.2f}s, "
                     f"max mass residual {report.max_mass_residual(name):.1e}")
    if report.l1:
        parts.append("L1 " + ", ".join(f"edge {e}: {v:.4g}" for e, v in report.l1.items()))
    return "\n  ".join(parts)


def _finish(reports) -> int:
    status = 0
    for r in reports:
        print(_summary(r))
        for w in r.warnings:
            print(f"  warning: {w}")
        for d in r.diagnostics:
            print(f"  error: {d}", file=sys.stderr)
            status = 1
    return status


def cmd_run(args) -> int:
    s = load_scenario(args.config).with_overrides(args.epsilon, args.cells, args.t_final)
    report = run_scenario(s, args.model, args.out, args.backend)
    return _finish([report])


def cmd_suite(args) -> int:
    from .suite import run_suite, scenario_suite

    scenarios = [s for s in scenario_suite() if not args.select or any(k in s.name for k in args.select)]
    if not scenarios:
        raise ScenarioError(f"no packaged scenario matches {args.select}")
    reports = run_suite(args.out, scenarios, model=args.model, workers=args.workers, backend=args.backend)
    return _finish(reports)


def cmd_coupling_table(args) -> int:
    res = resolve_node(args.kind, args.u_B, args.v)
    print(json.dumps(res.as_dict(), indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="burgersnet", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one scenario file")
    run.add_argument("--config", required=True, help="scenario YAML file")
    run.add_argument("--model", choices=MODELS, default="both")
    run.add_argument("--out", default=None, help="output directory for CSV snapshots and report.json")
    run.add_argument("--epsilon", type=float, default=None)
    run.add_argument("--cells", type=int, default=None)
    run.add_argument("--t-final", type=float, default=None)
    run.add_argument("--backend", choices=("cython", "python"), default=None)
    run.set_defaults(func=cmd_run)

    suite = sub.add_parser("suite", help="run all packaged scenarios")
    suite.add_argument("--out", default=None)
    suite.add_argument("--model", choices=MODELS, default="both")
    suite.add_argument("--workers", type=int, default=None)
    suite.add_argument("--select", nargs="*", default=None, help="run only scenarios whose name contains one of these")
    suite.add_argument("--backend", choices=("cython", "python"), default=None)
    suite.set_defaults(func=cmd_suite)

    table = sub.add_parser("coupling-table", help="evaluate a node coupling table")
    table.add_argument("kind", choices=("1-1", "1-2", "2-1"))
    table.add_argument("u_B", type=float, nargs="+", help="edge states in role order (in-edges first)")
    table.add_argument("--v", type=float, default=2.0, help="kinetic speed, v2 = -v1 = v")
    table.set_defaults(func=cmd_coupling_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "coupling-table":
        need = 2 if args.kind == "1-1" else 3
        if len(args.u_B) != need:
            parser.error(f"{args.kind} node needs {need} states, got {len(args.u_B)}")
    try:
        return args.func(args)
    except (ScenarioError, ScenarioFormatError, ValueError, FloatingPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
