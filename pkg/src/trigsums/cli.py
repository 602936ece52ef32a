"""Command-line front end: ``trigsums <command> [options]``.

Exact values are printed as ``p/q``; floats get a digit count derived from
``--precision-bits``.  ``verify`` and ``sweep`` exit 0 iff every check
passes.  Usage and domain errors go to stderr with exit status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import mpmath

from . import closed_forms as cf
from . import resistor, verlinde
from .errors import TrigSumError
from .power_sums import DEFAULT_PRECISION_BITS

COMMANDS = ("eval", "verify", "sweep", "resistance", "kirchhoff", "verlinde", "oracle")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class CommandRequest:
    command: str
    parameters: dict = field(default_factory=dict)
    output_format: str = "text"
    precision_bits: int = DEFAULT_PRECISION_BITS

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")
        if not isinstance(self.precision_bits, int) or self.precision_bits < 64:
            raise UsageError("--precision-bits must be an integer >= 64")


@dataclass
class CommandResult:
    status: int
    output: str


def _digits(bits: int) -> int:
    return max(15, int(bits * 0.30103) - 4)


def _decimal(x, bits: int) -> str:
    with mpmath.workprec(bits):
        return mpmath.nstr(x, _digits(bits))


def _need(params: dict, *names: str) -> None:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _spec(params: dict) -> cf.SumSpec:
    _need(params, "family", "N")
    try:
        family = cf.Family(params["family"])
    except ValueError:
        raise UsageError(f"unknown family {params['family']!r}") from None
    return cf.SumSpec(family, params["N"], params.get("l"), params.get("m"))


def _render_rows(rows: List[dict], fmt: str, columns: List[str], text_line) -> str:
    if fmt == "json":
        return json.dumps(rows if len(rows) != 1 else rows[0], sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            flat = dict(row)
            if isinstance(flat.get("spec"), dict):
                flat["spec"] = " ".join(f"{k}={v}" for k, v in flat["spec"].items())
            writer.writerow(flat)
        return buf.getvalue()
    return "".join(text_line(r) + "\n" for r in rows)


def _report_line(r: dict) -> str:
    spec = " ".join(f"{k}={v}" for k, v in r["spec"].items())
    if r["error"]:
        return f"{spec}: FAIL ({r['error']})"
    verdict = "PASS" if r["passed"] else "FAIL"
    return f"{spec}: closed={r['closed']} oracle={r['oracle']} abs_error={r['abs_error']} {verdict}"


REPORT_COLUMNS = ["spec", "closed", "oracle", "abs_error", "passed", "error"]


def _cmd_eval(req: CommandRequest) -> CommandResult:
    spec = _spec(req.parameters)
    value = cf.evaluate(spec)
    row = {"spec": spec.to_dict(), "closed": str(value)}
    return CommandResult(0, _render_rows([row], req.output_format, ["spec", "closed"], lambda r: r["closed"]))


def _cmd_oracle(req: CommandRequest) -> CommandResult:
    spec = _spec(req.parameters)
    value = cf.oracle_trig_sum(spec, req.precision_bits)
    row = {"spec": spec.to_dict(), "oracle": _decimal(value, req.precision_bits)}
    return CommandResult(0, _render_rows([row], req.output_format, ["spec", "oracle"], lambda r: r["oracle"]))


def _cmd_verify(req: CommandRequest) -> CommandResult:
    report = cf.verify(_spec(req.parameters), req.precision_bits).to_dict()
    out = _render_rows([report], req.output_format, REPORT_COLUMNS, _report_line)
    return CommandResult(0 if report["passed"] else 1, out)


def _cmd_sweep(req: CommandRequest) -> CommandResult:
    p = req.parameters
    _need(p, "family", "N_max")
    try:
        family = cf.Family(p["family"])
    except ValueError:
        raise UsageError(f"unknown family {p['family']!r}") from None
    m_max = p.get("m_max") or 5
    reports = [cf.verify(s, req.precision_bits).to_dict()
               for s in cf.admissible_specs(family, p["N_max"], m_max, p.get("N_min") or 2)]
    if req.output_format == "json":
        out = json.dumps(reports) + "\n"
    else:
        out = _render_rows(reports, req.output_format, REPORT_COLUMNS, _report_line)
    ok = all(r["passed"] for r in reports)
    return CommandResult(0 if ok else 1, out)


def _parse_point(text: str):
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected a grid point 'row,col', got {text!r}") from None
    return x, y


def _cmd_resistance(req: CommandRequest) -> CommandResult:
    p, bits = req.parameters, req.precision_bits
    if p.get("graph_file"):
        _need(p, "a", "b")
        graph = resistor.UnitGraph.from_file(p["graph_file"])
        a, b = int(p["a"]), int(p["b"])
        row = {"a": a, "b": b, "resistance": str(resistor.laplacian_resistance(graph, a, b))}
        return CommandResult(0, _render_rows([row], req.output_format, list(row), lambda r: r["resistance"]))
    if p.get("rows") is not None:
        _need(p, "cols", "a", "b")
        net = resistor.GridNetwork(p["rows"], p["cols"])
        p1, p2 = _parse_point(str(p["a"])), _parse_point(str(p["b"]))
        exact = resistor.laplacian_resistance(net.to_graph(), net.node(*p1), net.node(*p2)) if p1 != p2 else Fraction(0)
        wu = resistor.wu_resistance(net, p1, p2, bits)
        row = {"a": f"{p1[0]},{p1[1]}", "b": f"{p2[0]},{p2[1]}", "resistance": str(exact),
               "wu": _decimal(wu, bits)}
        return CommandResult(0, _render_rows([row], req.output_format, list(row),
                                             lambda r: f"{r['resistance']} (Wu: {r['wu']})"))
    _need(p, "N")
    value = resistor.corner_to_corner_2xN(p["N"])
    row = {"N": p["N"], "resistance": str(value)}
    return CommandResult(0, _render_rows([row], req.output_format, list(row), lambda r: r["resistance"]))


def _cmd_kirchhoff(req: CommandRequest) -> CommandResult:
    p = req.parameters
    if p.get("graph_file"):
        value = resistor.kirchhoff_exact(resistor.UnitGraph.from_file(p["graph_file"]))
        row = {"graph": p["graph_file"], "kirchhoff": str(value)}
    else:
        _need(p, "N")
        value = resistor.path_kirchhoff(p["N"]) if p.get("path") else resistor.kirchhoff_2xN(p["N"])
        row = {"N": p["N"], "kirchhoff": str(value)}
    return CommandResult(0, _render_rows([row], req.output_format, list(row), lambda r: r["kirchhoff"]))


def _cmd_verlinde(req: CommandRequest) -> CommandResult:
    p = req.parameters
    _need(p, "g", "k")
    twisted = bool(p.get("twisted"))
    value = verlinde.BlockDimensionQuery(p["g"], p["k"], twisted).evaluate()
    row = {"g": p["g"], "k": p["k"], "twisted": twisted, "dimension": str(value)}
    return CommandResult(0, _render_rows([row], req.output_format, list(row), lambda r: r["dimension"]))


_HANDLERS = {
    "eval": _cmd_eval, "verify": _cmd_verify, "sweep": _cmd_sweep, "oracle": _cmd_oracle,
    "resistance": _cmd_resistance, "kirchhoff": _cmd_kirchhoff, "verlinde": _cmd_verlinde,
}


def run(request: CommandRequest) -> CommandResult:
    """Execute one request; raises UsageError or TrigSumError on bad input."""
    return _HANDLERS[request.command](request)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
    common.add_argument("--format", choices=FORMATS, default="text")
    families = [f.value for f in cf.Family]

    parser = argparse.ArgumentParser(prog="trigsums", description="Exact trigonometric sums and their oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("eval", "exact closed-form value"), ("verify", "closed form vs oracle"),
                            ("oracle", "direct high-precision summation")):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("--family", required=True, choices=families)
        sp.add_argument("--N", type=int, required=True)
        sp.add_argument("--l", type=int)
        sp.add_argument("--m", type=int)

    sp = sub.add_parser("sweep", parents=[common], help="verify every admissible spec of a family")
    sp.add_argument("--family", required=True, choices=families)
    sp.add_argument("--N-max", type=int, required=True)
    sp.add_argument("--N-min", type=int, default=2)
    sp.add_argument("--m-max", type=int, default=5)

    sp = sub.add_parser("resistance", parents=[common], help="two-point resistance")
    sp.add_argument("--N", type=int, help="corner-to-corner resistance of the 2 x N grid")
    sp.add_argument("--graph-file", help="edge-list file; use with --a and --b node indices")
    sp.add_argument("--rows", type=int, help="grid rows; use with --cols and --a/--b as 'row,col'")
    sp.add_argument("--cols", type=int)
    sp.add_argument("--a")
    sp.add_argument("--b")

    sp = sub.add_parser("kirchhoff", parents=[common], help="Kirchhoff index")
    sp.add_argument("--N", type=int)
    sp.add_argument("--path", action="store_true", help="path graph on N nodes instead of the 2 x N grid")
    sp.add_argument("--graph-file")

    sp = sub.add_parser("verlinde", parents=[common], help="conformal-block dimension")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--twisted", action="store_true")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "precision_bits")}
    try:
        request = CommandRequest(args.command, params, args.format, args.precision_bits)
        result = run(request)
    except (UsageError, TrigSumError, ValueError, OSError) as exc:
        print(f"trigsums {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(result.output)
    return result.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
