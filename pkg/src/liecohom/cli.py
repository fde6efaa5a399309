"""Command-line front-end.

Inputs are `.lie` files or embedded corpus entries addressed as
``corpus:NAME``.  Exit codes: 0 success, 1 verification failure, 2 parse
error, 3 precondition violation (non-integrable structure, degenerate
metric, undefined Aeppli class, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import corpus
from .analysis import aeppli_class_vanishes, classify_metric
from .cohomology import ALL_GROUPS, full_report
from .errors import (
    IntegrabilityError,
    LieCohomError,
    MetricError,
    ParseError,
    PreconditionError,
)
from .hodge import HermitianMetric
from .structure import (
    LieFile,
    _TokenStream,
    _parse_scalar_atom,
    _tokenize_line,
    parse_lie,
    render_structure,
)
from .verification import DEFAULT_SEED, run_all


def _load_input(source: str) -> LieFile:
    if source.startswith("corpus:"):
        name = source.split(":", 1)[1]
        try:
            entry = corpus.get(name)
        except KeyError as exc:
            raise ParseError(str(exc)) from exc
        return entry.load()
    path = Path(source)
    if not path.exists():
        raise ParseError(f"no such file: {source}")
    return parse_lie(path.read_text(encoding="utf-8"), name=path.stem)


def _parse_metric_file(text: str, n: int) -> HermitianMetric:
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.startswith("metric"):
            if "identity" in content:
                return HermitianMetric.identity(n)
            continue  # 'metric hermitian' header before the rows
        ts = _TokenStream(_tokenize_line(content, line_no), line_no)
        row = [_parse_scalar_atom(ts, allow_sign=True) for _ in range(n)]
        if not ts.done():
            tok = ts.peek()
            raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"metric file must contain {n} rows, found {len(rows)}")
    return HermitianMetric(rows)


def _resolve_metric(choice: Optional[str], lie: LieFile) -> HermitianMetric:
    n = lie.structure.n
    if choice is None:
        return lie.metric or HermitianMetric.identity(n)
    if choice == "identity":
        return HermitianMetric.identity(n)
    path = Path(choice)
    if not path.exists():
        raise ParseError(f"no such metric file: {choice}")
    return _parse_metric_file(path.read_text(encoding="utf-8"), n)


def _emit(data: dict, as_json: bool, text_renderer) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        text_renderer(data)


def cmd_parse(args) -> int:
    lie = _load_input(args.input)
    s = lie.structure
    print(render_structure(s))
    if lie.metric is not None:
        print("metric hermitian")
        for row in lie.metric.entries:
            print("  " + "  ".join(str(x) for x in row))
    f = s.flags
    print(
        f"flags: integrable={str(f.integrable).lower()} "
        f"unimodular={str(f.unimodular).lower()} "
        f"nilpotent={str(f.nilpotent).lower()}"
    )
    return 0


def _render_report_text(data: dict) -> None:
    print(f"algebra: {data['algebra']} (n={data['n']}, {data['level']} forms)")
    flags = data["flags"]
    print(
        "flags: "
        + " ".join(f"{k}={str(v).lower()}" for k, v in flags.items())
    )
    if data.get("metric_class"):
        print(
            "metric: "
            + " ".join(f"{k}={str(v).lower()}" for k, v in data["metric_class"].items())
        )
    titles = {
        "bc": "bott-chern",
        "a": "aeppli",
        "dolbeault": "dolbeault",
        "derham": "de rham",
    }
    for kind, table in data["cohomology"].items():
        print(f"{titles.get(kind, kind)}:")
        for key, cell in table.items():
            if cell["dim"] == 0:
                continue
            label = f"({key})" if "," in key else f"k={key}"
            reps = "  reps: " + ", ".join(cell["reps"]) if cell["reps"] else ""
            print(f"  {label}: dim {cell['dim']}{reps}")
    for decision in data.get("aeppli_decisions", []):
        line = f"aeppli class of omega^{data['n'] - decision['p']} (p={decision['p']}): "
        line += "vanishes" if decision["vanishes"] else "does not vanish"
        print(line)


def cmd_cohomology(args) -> int:
    lie = _load_input(args.input)
    groups = tuple(g.strip() for g in args.groups.split(",")) if args.groups else ALL_GROUPS
    for g in groups:
        if g not in ALL_GROUPS:
            raise PreconditionError(
                f"unknown group {g!r}; choose from {', '.join(ALL_GROUPS)}"
            )
    metric = _resolve_metric(args.metric, lie)
    report = full_report(lie.structure, metric, groups=groups)
    _emit(report.to_dict(), args.json, _render_report_text)
    return 0


def cmd_classify(args) -> int:
    lie = _load_input(args.input)
    metric = _resolve_metric(args.metric, lie)
    mc = classify_metric(lie.structure, metric)
    data = {
        "algebra": lie.structure.name,
        "metric_class": {
            "kaehler": mc.kaehler,
            "balanced": mc.balanced,
            "gauduchon": mc.gauduchon,
            "skt": mc.skt,
        },
    }

    def text(d):
        print(f"algebra: {d['algebra']}")
        for k, v in d["metric_class"].items():
            print(f"  {k}: {str(v).lower()}")

    _emit(data, args.json, text)
    return 0


def cmd_aeppli(args) -> int:
    lie = _load_input(args.input)
    metric = _resolve_metric(args.metric, lie)
    decision = aeppli_class_vanishes(lie.structure, metric, args.p)
    data = {"algebra": lie.structure.name, **decision.to_dict()}

    def text(d):
        n = lie.structure.n
        verdict = "vanishes" if d["vanishes"] else "does not vanish"
        print(f"[omega^{n - d['p']}]_A on {d['algebra']} (p={d['p']}): {verdict}")
        if d["witness"]:
            print(f"  mu     = {d['witness']['mu']}")
            print(f"  lambda = {d['witness']['lambda']}")
        if d["obstruction"]:
            print(f"  obstruction (harmonic): {d['obstruction']['form']}")
            print(f"  pairing: {d['obstruction']['pairing']}")

    _emit(data, args.json, text)
    return 0


def cmd_verify(args) -> int:
    scope = args.scope
    if scope != "all" and scope.startswith("corpus:"):
        scope = scope.split(":", 1)[1]
    if scope != "all" and scope not in corpus.CORPUS:
        raise ParseError(f"unknown corpus entry {scope!r}")
    results = run_all(scope=scope, seed=args.seed)
    failures = [r for r in results if not r.passed]
    if args.json:
        print(
            json.dumps(
                [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        for r in results:
            print(r.line())
        print(
            f"\n{len(results) - len(failures)}/{len(results)} checks passed"
            + (f"; {len(failures)} FAILED" if failures else "")
        )
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecohom",
        description="Exact cohomology of invariant forms on Lie-group "
        "quotients with invariant complex structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="echo normalized equations and flags")
    p.add_argument("input", help="a .lie file or corpus:NAME")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("cohomology", help="compute cohomology tables")
    p.add_argument("input")
    p.add_argument("--groups", default=None, help="comma list of bc,a,dolbeault,derham")
    p.add_argument("--metric", default=None, help="'identity' or a metric file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("classify", help="classify the metric")
    p.add_argument("input")
    p.add_argument("--metric", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("aeppli", help="decide Aeppli-class vanishing of omega^(n-p)")
    p.add_argument("input")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--metric", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_aeppli)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("scope", nargs="?", default="all", help="'all' or a corpus entry name")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, IntegrabilityError, MetricError) as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return 3
    except LieCohomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
