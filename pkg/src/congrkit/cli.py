"""Command-line front end.

Subcommands: ``list`` (family catalogue), ``seq`` and ``poly`` (exact value
dumps), ``verify`` (one family or the whole default sweep), ``scan`` (open
questions) and ``qverify`` (q-polynomial families).  Reports serialize to
text, JSON or CSV; output bytes depend only on the requested configuration,
never on the worker count, and the timestamp field stays null unless
``--stamp`` is given.

Exit codes: 0 when no instance FAILs or is ILL_POSED, 1 otherwise, 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from . import __version__, registry, sequences
from .result import FAIL, ILL_POSED, CheckResult, summarize
from .verify import THM15_VARIANTS

__all__ = ["Report", "build_parser", "emit_report", "main"]

_SEQUENCES = {
    "R": sequences.R,
    "S": sequences.S,
    "schroder": sequences.schroder,
    "t": sequences.t_seq,
    "T": sequences.T_seq,
    "Tplus": sequences.T_plus,
    "Tminus": sequences.T_minus,
    "s": sequences.s_small,
    "Splus": sequences.S_cplus,
    "Sminus": sequences.S_cminus,
}

_QVERIFY_ALIASES = {"thm31": "thm31q", "thm32": "thm32q", "conj58": "conj58q"}

_PIN_KEYS = ("n", "p", "d", "k", "a", "b", "m", "s", "t", "a_prime", "variant")


@dataclass
class Report:
    """Assembled verification report: config echo plus ordered results."""

    config: dict
    results: list[CheckResult] = field(default_factory=list)
    timestamp: Optional[str] = None
    version: str = __version__

    def summary(self) -> dict[str, int]:
        return summarize(self.results)

    def to_obj(self) -> dict:
        return {
            "version": self.version,
            "timestamp": self.timestamp,
            "config": self.config,
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary(),
        }


# -- serialization ---------------------------------------------------------------


def _compact(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _text_bytes(lines: list[str]) -> bytes:
    return ("\n".join(lines) + "\n").encode("utf-8")


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def _csv_bytes(header: list[str], rows: list[list]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def _params_text(params: dict) -> str:
    return " ".join("%s=%s" % (key, _compact(val)) for key, val in params.items())


def _result_line(r: CheckResult) -> str:
    bits = ["%-11s" % r.status, "%-10s" % r.family, _params_text(r.params)]
    if r.modulus:
        bits.append("(mod %s)" % r.modulus)
    if r.status in (FAIL, ILL_POSED):
        bits.append("lhs=%s rhs=%s" % (r.lhs, r.rhs))
        if r.witness is not None:
            bits.append("witness=%s" % _compact(r.witness))
    if r.note:
        bits.append("-- %s" % r.note)
    return "  ".join(bits).rstrip()


def emit_report(report: Report, fmt: str) -> bytes:
    """Deterministic serialization of a verification report."""
    if fmt == "json":
        return _json_bytes(report.to_obj())
    if fmt == "csv":
        rows = [
            [
                r.family,
                _compact(r.params),
                r.status,
                r.lhs,
                r.rhs,
                r.modulus,
                _compact(r.witness) if r.witness is not None else "",
                r.note,
            ]
            for r in report.results
        ]
        return _csv_bytes(
            ["family", "params", "status", "lhs", "rhs", "modulus", "witness", "note"],
            rows,
        )
    lines = ["congrkit %s" % report.version]
    if report.timestamp:
        lines.append("timestamp %s" % report.timestamp)
    lines.append("config %s" % _compact(report.config))
    lines.extend(_result_line(r) for r in report.results)
    s = report.summary()
    lines.append(
        "summary pass=%d fail=%d ill_posed=%d inconclusive=%d"
        % (s["pass"], s["fail"], s["ill_posed"], s["inconclusive"])
    )
    return _text_bytes(lines)


def _write(payload: bytes, out: Optional[str]) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


# -- shared command plumbing --------------------------------------------------------


def _stamp(args: argparse.Namespace) -> Optional[str]:
    if getattr(args, "stamp", False):
        return datetime.now(timezone.utc).isoformat(timespec="seconds")
    return None


def _pins_from(args: argparse.Namespace) -> dict:
    pins = {}
    for key in _PIN_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            pins[key] = value
    return pins


def _bounds_from(args: argparse.Namespace) -> dict:
    return {"max_n": args.max_n, "max_p": args.max_p, "max_m": args.max_m}


def _config(
    args: argparse.Namespace,
    family: str,
    params: Optional[dict] = None,
    bounds: Optional[dict] = None,
) -> dict:
    # jobs and --out stay out of the echo so the payload does not depend on them
    config = {"command": args.command, "family": family}
    if params is not None:
        config["params"] = params
    if bounds:
        trimmed = {key: val for key, val in bounds.items() if val is not None}
        if trimmed:
            config["bounds"] = trimmed
    config["format"] = args.format
    return config


def _execute(pairs: list[tuple[str, dict]], jobs: int) -> list[CheckResult]:
    if jobs > 1 and len(pairs) > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            return pool.map(registry.run_pair, pairs)
    return [registry.run_pair(pair) for pair in pairs]


def _finish_checks(
    args: argparse.Namespace,
    parser: argparse.ArgumentParser,
    pairs: list[tuple[str, dict]],
    config: dict,
) -> int:
    try:
        results = _execute(pairs, args.jobs)
    except (KeyError, ValueError) as exc:
        parser.error(str(exc))
    report = Report(config=config, results=results, timestamp=_stamp(args))
    _write(emit_report(report, args.format), args.out)
    s = report.summary()
    return 0 if not s["fail"] and not s["ill_posed"] else 1


def _run_checks(
    args: argparse.Namespace,
    parser: argparse.ArgumentParser,
    names: list[str],
    multi: bool,
) -> int:
    pins = _pins_from(args)
    bounds = _bounds_from(args)
    if pins:
        if multi:
            parser.error("explicit parameters go with a single family")
        fam = registry.get_family(names[0])
        try:
            params = fam.instance_from_pins(pins)
        except ValueError as exc:
            parser.error(str(exc))
        pairs = [(fam.name, params)]
        config = _config(args, family=fam.name, params=params)
    else:
        pairs = registry.all_jobs(names, bounds)
        config = _config(
            args, family="all" if multi else names[0], bounds=bounds
        )
    return _finish_checks(args, parser, pairs, config)


# -- subcommand handlers -------------------------------------------------------------


def _cmd_list(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    lines = []
    for group in registry.GROUPS:
        lines.append(group)
        for name in registry.family_names():
            fam = registry.FAMILIES[name]
            if fam.group == group:
                lines.append("  %-10s -> %s" % (name, fam.anchor))
    _write(_text_bytes(lines), args.out)
    return 0


def _cmd_seq(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    fn = _SEQUENCES[args.name]
    values = [fn(n) for n in range(args.max + 1)]
    config = {
        "command": "seq",
        "name": args.name,
        "max": args.max,
        "format": args.format,
    }
    if args.format == "json":
        payload = _json_bytes(
            {
                "version": __version__,
                "timestamp": _stamp(args),
                "config": config,
                "values": [str(v) for v in values],
            }
        )
    elif args.format == "csv":
        payload = _csv_bytes(["n", "value"], list(enumerate(values)))
    else:
        payload = _text_bytes(
            ["%s(%d) = %d" % (args.name, n, v) for n, v in enumerate(values)]
        )
    _write(payload, args.out)
    return 0


def _cmd_poly(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.name == "Sm":
        if args.m is None:
            parser.error("poly Sm needs --m")
        poly = sequences.S_m_poly(args.m, args.n)
        label = "Sm(n=%d, m=%d)" % (args.n, args.m)
    else:
        if args.m is not None:
            parser.error("--m only applies to the Sm polynomials")
        maker = sequences.R_poly if args.name == "R" else sequences.S_poly
        poly = maker(args.n)
        label = "%s(n=%d)" % (args.name, args.n)
    config = {"command": "poly", "name": args.name, "n": args.n}
    if args.m is not None:
        config["m"] = args.m
    config["format"] = args.format
    if args.format == "json":
        payload = _json_bytes(
            {
                "version": __version__,
                "timestamp": _stamp(args),
                "config": config,
                "coeffs": [str(c) for c in poly.coeffs],
            }
        )
    elif args.format == "csv":
        payload = _csv_bytes(
            ["power", "coefficient"], list(enumerate(poly.coeffs))
        )
    else:
        payload = _text_bytes(["%s = %s" % (label, poly.render())])
    _write(payload, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.all:
        if args.family:
            parser.error("give a family or --all, not both")
        return _run_checks(args, parser, registry.family_names(), multi=True)
    if not args.family:
        parser.error("family required (or --all)")
    return _run_checks(args, parser, [args.family], multi=False)


def _cmd_scan(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    bounds = _bounds_from(args)
    if args.selector in ("conj54", "conj55"):
        # one explicit bound narrows the mixed scan to the matching sweep
        if bounds["max_n"] is not None and bounds["max_p"] is None:
            bounds["max_p"] = 0
        elif bounds["max_p"] is not None and bounds["max_n"] is None:
            bounds["max_n"] = 0
    pairs = registry.all_jobs([args.selector], bounds)
    config = _config(args, family=args.selector, bounds=bounds)
    return _finish_checks(args, parser, pairs, config)


def _cmd_qverify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    name = _QVERIFY_ALIASES.get(args.family, args.family)
    return _run_checks(args, parser, [name], multi=False)


# -- parser assembly -----------------------------------------------------------------


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", metavar="PATH", help="write the report to a file")
    p.add_argument(
        "--stamp", action="store_true", help="include a wall-clock timestamp"
    )


def _run_flags(p: argparse.ArgumentParser) -> None:
    _output_flags(p)
    p.add_argument(
        "--jobs", type=_positive, default=1, help="worker processes for the sweep"
    )


def _pin_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--p", type=_positive)
    p.add_argument("--d", type=_nonneg)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=_positive)
    p.add_argument("--s", type=_nonneg)
    p.add_argument("--t", type=_nonneg)
    p.add_argument("--a-prime", dest="a_prime", type=_nonneg)
    p.add_argument("--variant", choices=THM15_VARIANTS)


def _bound_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", dest="max_n", type=_nonneg)
    p.add_argument("--max-p", dest="max_p", type=_nonneg)
    p.add_argument("--max-m", dest="max_m", type=_positive)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congrkit",
        description="Exact checks for two families of binomial-sum numbers: "
        "sequence dumps, congruence verification, q-analogues and "
        "open-question scans.",
    )
    parser.add_argument(
        "--version", action="version", version="congrkit " + __version__
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_list = sub.add_parser("list", help="show every registered family")
    p_list.add_argument("--out", metavar="PATH")
    p_list.set_defaults(handler=_cmd_list)

    p_seq = sub.add_parser("seq", help="dump one of the integer sequences")
    p_seq.add_argument("name", choices=tuple(_SEQUENCES), metavar="name")
    p_seq.add_argument("--max", type=_nonneg, required=True, help="largest index")
    _output_flags(p_seq)
    p_seq.set_defaults(handler=_cmd_seq)

    p_poly = sub.add_parser("poly", help="dump one polynomial")
    p_poly.add_argument("name", choices=("R", "S", "Sm"))
    p_poly.add_argument("--n", type=_nonneg, required=True)
    p_poly.add_argument("--m", type=_positive)
    _output_flags(p_poly)
    p_poly.set_defaults(handler=_cmd_poly)

    p_verify = sub.add_parser("verify", help="verify one family, or --all")
    p_verify.add_argument(
        "family", nargs="?", choices=registry.family_names(), metavar="family"
    )
    p_verify.add_argument(
        "--all", action="store_true", help="run every registered family"
    )
    _pin_flags(p_verify)
    _bound_flags(p_verify)
    _run_flags(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_scan = sub.add_parser("scan", help="scan one of the open questions")
    p_scan.add_argument(
        "selector", choices=registry.SCAN_SELECTORS, metavar="conjecture"
    )
    _bound_flags(p_scan)
    _run_flags(p_scan)
    p_scan.set_defaults(handler=_cmd_scan)

    p_q = sub.add_parser("qverify", help="verify one q-polynomial family")
    q_names = sorted(registry.Q_FAMILIES + tuple(_QVERIFY_ALIASES))
    p_q.add_argument("family", choices=q_names, metavar="family")
    _pin_flags(p_q)
    _bound_flags(p_q)
    _run_flags(p_q)
    p_q.set_defaults(handler=_cmd_qverify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
