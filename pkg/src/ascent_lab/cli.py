"""Command-line interface: ``ascent-lab {growth,witness,module,separate,ascend}``.

Exit codes: 0 success, 2 bad input, 3 budget exceeded or truncated,
4 not properly ascending, 5 collision found, 6 separating quotient found.
Data goes to stdout (or ``--out``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from ascent_lab.errors import AscentLabError, BudgetExceeded, NotProperlyAscending, ParseError
from ascent_lab.exact.laurent import parse_laurent
from ascent_lab.groups.base import format_word
from ascent_lab.groups.spec import build_group, parse_group_spec
from ascent_lab.growth import growth_series, rate_diagnostics, semigroup_lower_bound
from ascent_lab.module_engine import CyclicModulePresentation, build_metabelian_group, t_stability
from ascent_lab.quotients import polycyclic_separation_demo, separation_report
from ascent_lab.witness import certify, default_cap

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_NOT_ASCENDING = 4
EXIT_COLLISION = 5
EXIT_SEPARATED = 6


class Output:
    def __init__(self, path: str | None):
        self.path = path
        self.chunks: list[str] = []

    def write(self, text: str) -> None:
        self.chunks.append(text)

    def line(self, text: str = "") -> None:
        self.chunks.append(text + "\n")

    def flush(self) -> None:
        data = "".join(self.chunks)
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)
            sys.stdout.flush()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_growth(args, out: Output) -> int:
    group = build_group(args.group)
    series = growth_series(group, radius=args.radius, budget=args.budget or default_cap())
    if args.format == "csv":
        out.write(series.to_csv())
    elif args.format == "json":
        out.write(series.to_json())
    else:
        out.line(f"group {series.group}  generators {' '.join(series.generators)}")
        out.line(f"{'n':>4} {'sphere':>12} {'ball':>12}")
        for n, (s, b) in enumerate(zip(series.spheres, series.balls)):
            out.line(f"{n:>4} {s:>12} {b:>12}")
        if series.radius >= 2:
            rates = rate_diagnostics(series)
            ratios = "  ".join(f"n={n}: {v:.6f}" for n, v in rates.doubling.items())
            out.line(f"doubling log2(ball(2n)/ball(n)): {ratios}")
    if series.truncated:
        print(f"truncated at radius {series.radius}: element budget exhausted", file=sys.stderr)
        if args.format == "table":
            out.line(f"TRUNCATED at radius {series.radius}")
        return EXIT_BUDGET
    return EXIT_OK


def _witness_payload(group, length, cap, cert_radius):
    u, pair, words, verdict = certify(group, length, cap)
    payload = {
        "group": str(group.spec),
        "u": group.format(u),
        "u_word": format_word(words[1][1:]),
        "pair": [format_word(words[0]), format_word(words[1])],
        "verdict": verdict.to_dict(),
    }
    cert = None
    if verdict.is_free and cert_radius > 0:
        series = growth_series(group, radius=cert_radius, budget=cap)
        cert = semigroup_lower_bound(series, verdict, [len(w) for w in words])
        payload["certificate"] = {
            "statement": cert.statement(),
            "checks": [[str(m), str(b), str(need)] for m, b, need in cert.checks],
        }
    return payload, verdict


def _emit_witness(payload, fmt, out: Output):
    if fmt == "json":
        out.write(_json(payload))
        return
    v = payload["verdict"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["group", "u", "s1", "s2", "status", "distinct"])
        w.writerow([payload["group"], payload["u_word"], *payload["pair"], v["status"], v["distinct"]])
        out.write(buf.getvalue())
        return
    out.line(f"group   {payload['group']}")
    out.line(f"u       {payload['u_word']}  =  {payload['u']}")
    out.line(f"pair    s1 = {payload['pair'][0]}   s2 = {payload['pair'][1]}")
    if "collision" in v:
        out.line(f"verdict COLLISION: {v['collision'][0]} = {v['collision'][1]} = {v['element']}")
    else:
        out.line(f"verdict {v['status']} ({v['distinct']} distinct elements)")
    if "certificate" in payload:
        out.line(f"growth  {payload['certificate']['statement']}")


def cmd_witness(args, out: Output) -> int:
    group = build_group(args.group)
    try:
        payload, verdict = _witness_payload(group, args.max_len, args.budget or default_cap(), args.radius)
    except NotProperlyAscending as exc:
        print(f"NotProperlyAscending: {exc}", file=sys.stderr)
        if args.format == "json":
            out.write(_json({"group": str(group.spec), "error": "NotProperlyAscending", "message": str(exc)}))
        return EXIT_NOT_ASCENDING
    _emit_witness(payload, args.format, out)
    return EXIT_OK if verdict.is_free else EXIT_COLLISION


def _module_report(poly_text):
    f = parse_laurent(poly_text)
    report = t_stability(CyclicModulePresentation(f))
    spec = None
    if report.fg_abelian and report.rank:
        spec = str(build_metabelian_group(CyclicModulePresentation(f)))
    return report, spec


def _emit_module(report, spec, fmt, out: Output):
    if fmt == "json":
        obj = report.to_dict()
        obj["spec"] = spec
        out.write(_json(obj))
        return
    comp = report.companion.to_literal() if report.companion is not None else ""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["f", "f0", "tStable", "fgAbelian", "rank", "companion", "spec"])
        rank = "" if report.rank is None else report.rank
        w.writerow([report.f, report.f0, str(report.t_stable).lower(), str(report.fg_abelian).lower(), rank, comp, spec or ""])
        out.write(buf.getvalue())
        return
    out.line(f"f          {report.f}")
    out.line(f"f0         {report.f0}")
    out.line(f"tStable    {str(report.t_stable).lower()}")
    out.line(f"fgAbelian  {str(report.fg_abelian).lower()}")
    if report.rank is not None:
        out.line(f"rank       {report.rank}")
    if comp:
        out.line(f"companion  {comp}")
    out.line(f"witness    {report.witness}")
    if spec:
        out.line(f"spec       {spec}")


def cmd_module(args, out: Output) -> int:
    report, spec = _module_report(args.poly)
    _emit_module(report, spec, args.format, out)
    return EXIT_OK


def cmd_ascend(args, out: Output) -> int:
    report, spec = _module_report(args.poly)
    if spec is None:
        _emit_module(report, spec, args.format, out)
        print("NotMonic: module is not finitely generated as an abelian group; no HNN group induced", file=sys.stderr)
        return EXIT_INPUT
    if args.format != "json":
        _emit_module(report, spec, args.format, out)
        args.group = spec
        return cmd_witness(args, out)
    module = report.to_dict()
    module["spec"] = spec
    try:
        payload, verdict = _witness_payload(build_group(spec), args.max_len, args.budget or default_cap(), args.radius)
    except NotProperlyAscending as exc:
        print(f"NotProperlyAscending: {exc}", file=sys.stderr)
        out.write(_json({"module": module, "witness": {"error": "NotProperlyAscending", "message": str(exc)}}))
        return EXIT_NOT_ASCENDING
    out.write(_json({"module": module, "witness": payload}))
    return EXIT_OK if verdict.is_free else EXIT_COLLISION


def cmd_separate(args, out: Output) -> int:
    spec = parse_group_spec(args.group)
    if spec.family == "zd":
        if spec.d != 1:
            raise ParseError(f"contrast mode supports zd:1 only, got {args.group}")
        q = polycyclic_separation_demo(args.index)
        if args.format == "json":
            out.write(_json({"group": "zd:1", "quotient": f"Z/{q.modulus}", "image_x": str(q.image_x),
                             "image_subgroup": [str(x) for x in q.image_subgroup], "separates": q.separates}))
        elif args.format == "csv":
            out.line("quotient,image_x,image_subgroup,separates")
            out.line(f"Z/{q.modulus},{q.image_x},{' '.join(map(str, q.image_subgroup))},{str(q.separates).lower()}")
        else:
            subgroup = "{" + ", ".join(map(str, q.image_subgroup)) + "}"
            out.line(f"separating quotient Z -> Z/{q.modulus}: image of a = {q.image_x}, image of <a^{args.index}> = {subgroup}")
        return EXIT_OK
    if spec.family != "bs":
        raise ParseError(f"separate supports bs:<n> or zd:1, got {args.group}")
    report = separation_report(spec.n, args.max_degree)
    if args.format == "csv":
        out.write(report.to_csv())
    elif args.format == "json":
        out.write(report.to_json())
    else:
        out.line(f"BS(1,{spec.n}) -> S_m, m = 1..{args.max_degree}")
        out.line(f"{'degree':>6} {'homs':>8} {'separating':>10}")
        for m, c in report.counts().items():
            sep = sum(1 for r in report.records if r.degree == m and not r.in_subgroup)
            out.line(f"{m:>6} {c:>8} {sep:>10}")
        out.line(f"verdict {report.verdict} (within the searched quotients)")
    return EXIT_SEPARATED if report.separated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ascent-lab",
        description="Exact computations on properly ascending HNN extensions.",
        epilog="exit codes: 0 ok, 2 bad input, 3 budget, 4 not properly ascending, 5 collision, 6 separated",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
        sp.add_argument("--out", help="write data to this file instead of stdout")
        sp.add_argument("--budget", type=int, default=None, help="element cap (env ASCENT_LAB_BUDGET)")

    g = sub.add_parser("growth", help="ball sizes of the Cayley graph")
    g.add_argument("--group", required=True)
    g.add_argument("--radius", type=int, default=None)
    common(g)

    w = sub.add_parser("witness", help="certify the free-semigroup pair (t, tu)")
    w.add_argument("--group", required=True)
    w.add_argument("--max-len", type=int, default=12)
    w.add_argument("--radius", type=int, default=8, help="growth radius for the lower-bound certificate (0 disables)")
    common(w)

    m = sub.add_parser("module", help="t-stability of Z[t,1/t]/(f)")
    m.add_argument("--poly", required=True)
    common(m)

    a = sub.add_parser("ascend", help="module report, then witness on the induced group")
    a.add_argument("--poly", required=True)
    a.add_argument("--max-len", type=int, default=12)
    a.add_argument("--radius", type=int, default=8)
    common(a)

    s = sub.add_parser("separate", help="search finite images for a separating quotient")
    s.add_argument("--group", required=True)
    s.add_argument("--max-degree", type=int, default=6)
    s.add_argument("--index", type=int, default=2, help="k for the zd:1 contrast mode")
    common(s)
    return p


COMMANDS = {
    "growth": cmd_growth,
    "witness": cmd_witness,
    "module": cmd_module,
    "ascend": cmd_ascend,
    "separate": cmd_separate,
}


def _check_budgets(args):
    for name in ("radius", "max_len", "max_degree", "budget", "index"):
        val = getattr(args, name, None)
        if val is not None and val <= 0 and not (name == "radius" and args.command != "growth"):
            raise ParseError(f"--{name.replace('_', '-')} must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "growth" and args.radius is None:
        family = args.group.split(":")[0].strip().lower()
        args.radius = 16 if family in ("heis", "zd") else 12
    out = Output(args.out)
    try:
        _check_budgets(args)
        code = COMMANDS[args.command](args, out)
    except BudgetExceeded as exc:
        print(f"BudgetExceeded: {exc}", file=sys.stderr)
        out.flush()
        return EXIT_BUDGET
    except AscentLabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
