"""dodecarail command line: check rules, run and verify scenarios, export them."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import circuits, engine, lattice, rules

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _table(path) -> rules.RuleTable:
    if path is None:
        return rules.load_rule_table()
    try:
        return rules.parse_rule_table(_read(path))
    except rules.MalformedRow as exc:
        raise InputError(f"{path}: {exc}") from None


def _scenario(ref: str) -> lattice.Scenario:
    if ref in circuits.CATALOG:
        return circuits.get_scenario(ref)
    p = Path(ref)
    if p.suffix or p.exists():
        return _import(p)
    raise InputError(str(circuits.UnknownScenario(ref)))


def _import(path) -> lattice.Scenario:
    try:
        s = lattice.load_scenario(_read(path), name=Path(path).stem)
    except lattice.ScenarioFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    defects = lattice.validate_graph(s.graph)
    if defects:
        raise InputError(f"{path}: graph defects: " + "; ".join(map(str, defects)))
    return s


def cmd_check_rules(args) -> int:
    path = args.path or args.rules
    t = _table(path)
    shown = path or "bundled full table"
    conflicts = rules.check_determinism(t)
    report = rules.redundancy_report(t)
    nd = sum(c.kind == "determinism" for c in conflicts)
    print(f"{len(t)} rules read from {shown}")
    for c in conflicts:
        print(f"  {c}")
    print(f"{len(conflicts)} conflicts ({nd} determinism, {len(conflicts) - nd} fallback)")
    print(f"{len(report.duplicate_pairs)} rotation-duplicate pairs")
    for a, b in report.duplicate_pairs:
        print(f"  line {a} = line {b}")
    anomalies = rules.label_anomalies(t)
    if anomalies:
        print(f"{len(anomalies)} rows labelled (0) that change state")
        for r in anomalies:
            print(f"  line {r.source_line}: {r.observation} -> {r.new_state}")
    if args.parikh:
        print("parikh vectors (line: black neighbours)")
        for line, n in report.parikh:
            print(f"  {line}: {n}")
    return EXIT_OK if not conflicts else EXIT_FAIL


def cmd_list(args) -> int:
    for name in circuits.scenario_catalog():
        s = circuits.get_scenario(name)
        print(f"{name:<26} {s.steps:>3} steps  {s.description}")
    return EXIT_OK


def _trace(args) -> tuple[lattice.Scenario, engine.Trace]:
    ref = args.scenario_pos or args.scenario
    if ref is None:
        raise InputError("no scenario given")
    s = _scenario(ref)
    steps = s.steps if args.steps is None else args.steps
    if steps < 0:
        raise InputError("--steps must be >= 0")
    return s, engine.run(s.graph, _table(args.rules), s.initial, steps, s.probes)


def cmd_run(args) -> int:
    _, tr = _trace(args)
    sys.stdout.write(engine.format_trace(tr, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.golden is None:
        raise InputError("--golden is required")
    golden = _read(args.golden)
    if args.steps is None:
        _, grows = engine.parse_trace_text(golden)
        args.steps = max((t for t, _ in grows), default=0)
    _, tr = _trace(args)
    verdict = engine.compare_trace(tr, golden)
    print(verdict)
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_export(args) -> int:
    ref = args.scenario_pos or args.scenario
    if ref is None:
        raise InputError("no scenario given")
    s = _scenario(ref)
    text = lattice.dump_scenario(s)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_import_run(args) -> int:
    s = _import(args.path)
    steps = s.steps if args.steps is None else args.steps
    if steps < 0:
        raise InputError("--steps must be >= 0")
    tr = engine.run(s.graph, _table(args.rules), s.initial, steps, s.probes)
    sys.stdout.write(engine.format_trace(tr, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dodecarail", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, scenario=True, fmt=True):
        sp.add_argument("--rules", metavar="PATH", help="rule file (default: bundled full table)")
        if scenario:
            sp.add_argument("scenario_pos", nargs="?", metavar="SCENARIO", help="catalog name or scenario file")
            sp.add_argument("--scenario", metavar="NAME|PATH")
        sp.add_argument("--steps", type=int, metavar="N")
        if fmt:
            sp.add_argument("--format", choices=("paper", "csv"), default="paper")

    cr = sub.add_parser("check-rules", help="look for conflicts and duplicates in a rule file")
    cr.add_argument("path", nargs="?")
    cr.add_argument("--rules", metavar="PATH")
    cr.add_argument("--parikh", action="store_true", help="also list black-neighbour counts per row")
    cr.set_defaults(func=cmd_check_rules)

    sub.add_parser("list-scenarios", help="list the scenario catalog").set_defaults(func=cmd_list)

    r = sub.add_parser("run", help="run a scenario and print its trace")
    common(r)
    r.set_defaults(func=cmd_run)

    v = sub.add_parser("verify", help="compare a run with a golden trace")
    common(v, fmt=False)
    v.add_argument("--golden", metavar="PATH")
    v.set_defaults(func=cmd_verify, format="paper")

    e = sub.add_parser("export", help="write a catalog scenario as a scenario file")
    e.add_argument("scenario_pos", nargs="?", metavar="SCENARIO")
    e.add_argument("--scenario", metavar="NAME|PATH")
    e.add_argument("-o", "--output", metavar="PATH")
    e.set_defaults(func=cmd_export)

    ir = sub.add_parser("import-run", help="load a scenario file and run it")
    ir.add_argument("path")
    common(ir, scenario=False)
    ir.set_defaults(func=cmd_import_run)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except rules.MissingRule as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except lattice.LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
