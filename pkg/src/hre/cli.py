"""``hre`` command-line front end.

Every subcommand accepts ``--format text|csv|json``.  JSON documents carry a
``schema`` name and ``version`` matching the files in ``hre/schema``.

Bad arguments exit with status 2.  Status 1 means ``certify`` returned
NOT_CERTIFIED or ``verify-map --expect clean`` met a counterexample.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from typing import Any, Callable, Sequence

from . import bounds, charclass, dickson, regcheck
from .gf2poly import TermLimitError

SCHEMA_VERSION = 1
FORMATS = ("text", "csv", "json")


class UsageError(ValueError):
    pass


def load_schema(name: str) -> dict[str, Any]:
    """The shipped JSON schema for ``hre.<name>`` output."""
    res = resources.files("hre").joinpath("schema", f"{name}.v{SCHEMA_VERSION}.json")
    return json.loads(res.read_text(encoding="utf-8"))


def _json(schema: str, payload: dict[str, Any]) -> str:
    doc = {"schema": f"hre.{schema}", "version": SCHEMA_VERSION, **payload}
    return json.dumps(doc, indent=2) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def parse_int_list(text: str) -> list[int]:
    """``3,4,5`` and ``2..8`` (inclusive) and mixtures like ``2,4..6``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = (int(x) for x in part.split("..", 1))
                if hi < lo:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError as exc:
            if isinstance(exc, UsageError):
                raise
            raise UsageError(f"cannot parse integer list {text!r}") from None
    if not out:
        raise UsageError(f"empty integer list {text!r}")
    return out


def _int_list_arg(text: str) -> list[int]:
    try:
        return parse_int_list(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# subcommands


def _bound_report(args) -> bounds.BoundReport:
    if args.problem == "regular":
        _need(args, "d", "k")
        return bounds.regular_bound(args.d, args.k)
    if args.problem == "skew":
        _need(args, "d", "l")
        return bounds.skew_bound(args.d, args.l)
    _need(args, "d", "k", "l")
    return bounds.regular_skew_bound(args.d, args.k, args.l)


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} {args.problem} needs {', '.join(missing)}")


def cmd_bound(args) -> tuple[str, int]:
    report = _bound_report(args)
    if args.format == "json":
        return _json("bound", report.to_dict()), 0
    if args.format == "csv":
        rows = [(e.formula_id, e.min_admissible_N, e.source) for e in report.entries]
        return _csv(("formula_id", "min_admissible_N", "source"), rows), 0
    return report.to_text() + "\n", 0


def cmd_table(args) -> tuple[str, int]:
    rows = bounds.paper_table(args.l, args.d)
    return bounds.render_table(rows, args.format), 0


def _certificate(args) -> charclass.Certificate:
    if args.problem == "regular":
        _need(args, "d", "k")
        return charclass.certify_regular(args.d, args.k)
    if args.problem == "skew":
        _need(args, "d", "l")
        return charclass.certify_skew(args.d, args.l)
    _need(args, "d", "k", "l")
    return charclass.certify_regular_skew(args.d, args.k, args.l)


def _flat_factors(cert: charclass.Certificate, part: str = "") -> list[tuple[str, Any]]:
    out = []
    for t in cert.trace:
        if isinstance(t, charclass.Certificate):
            out.extend(_flat_factors(t, t.problem))
        else:
            out.append((part or cert.problem, t))
    return out


def cmd_certify(args) -> tuple[str, int]:
    cert = _certificate(args)
    status = 0 if cert.certified else 1
    if args.format == "json":
        payload = cert.to_dict()
        if not args.trace:
            payload.pop("trace")
        return _json("certificate", payload), status
    if args.format == "csv":
        rows = [
            (
                part, f.count, f.degree, f.j, f.case, int(f.certified), str(f.witness),
                "" if f.lucas_coefficient is None else f.lucas_coefficient,
            )
            for part, f in _flat_factors(cert)
        ]
        header = ("part", "count", "degree", "j", "case", "certified", "witness", "lucas")
        return _csv(header, rows), status
    return cert.to_text(trace=args.trace) + "\n", status


def cmd_dickson(args) -> tuple[str, int]:
    alg = dickson.dickson_invariants(args.m)
    verified = None
    if args.verify:
        verified = dickson.verify_gl_invariance(alg, long_run=args.long_run)
    status = 0 if verified in (None, True) else 1
    if args.format == "json":
        payload = alg.to_dict()
        payload["gl_invariant"] = verified
        return _json("dickson", payload), status
    items = alg.to_dict()["invariants"]
    if args.format == "csv":
        return _csv(("m", "s", "degree", "polynomial"),
                    [(alg.m, i["s"], i["degree"], i["polynomial"]) for i in items]), status
    lines = [f"Dickson invariants, m={alg.m}"]
    lines.extend(f"  q_{{{alg.m},{i['s']}}} (degree {i['degree']}) = {i['polynomial']}" for i in items)
    if verified is not None:
        lines.append(f"  GL_{alg.m}(F_2)-invariant: {'yes' if verified else 'NO'}")
    return "\n".join(lines) + "\n", status


def cmd_verify_map(args) -> tuple[str, int]:
    family = regcheck.parse_family(args.family, default_param=args.k)
    sampler = regcheck.RandomSampler(args.seed, args.trials, args.bound)
    check = regcheck.check_affinely_regular if args.affine else regcheck.check_k_regular
    report = check(family, args.k, sampler, args.arithmetic, args.tolerance)
    status = 1 if args.expect == "clean" and not report.clean else 0
    if args.format == "json":
        return _json("regularity", report.to_dict()), status
    if args.format == "csv":
        d = report.to_dict()
        header = ("family", "k", "trials", "arithmetic", "verdict", "automatic_failure",
                  "failure_count", "min_separation")
        return _csv(header, [[d[h] for h in header]]), status
    return report.to_text() + "\n", status


# parser


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="text", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hre",
        description="Lower bounds and nonvanishing certificates for k-regular maps and l-skew embeddings.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    problems = ("regular", "skew", "regular-skew")
    p = sub.add_parser("bound", help="evaluate every lower bound for one problem")
    p.add_argument("problem", choices=problems)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    _add_format(p)
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("table", help="MAIN2 against l(d+1)-1 for a grid of (l, d)")
    p.add_argument("--l", type=_int_list_arg, required=True, help="comma list, e.g. 3,4,5")
    p.add_argument("--d", type=_int_list_arg, required=True, help="inclusive range, e.g. 2..8")
    _add_format(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("certify", help="certify a dual Stiefel-Whitney class is nonzero")
    p.add_argument("problem", choices=problems)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--trace", action="store_true", help="show the per-factor trace")
    _add_format(p)
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("dickson", help="Dickson invariants of GF(2)[x_1..x_m]")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check GL_m(F_2)-invariance")
    p.add_argument("--long-run", action="store_true", help="allow the m=4 exhaustive check")
    _add_format(p)
    p.set_defaults(handler=cmd_dickson)

    p = sub.add_parser("verify-map", help="sample k-tuples and test a map for k-regularity")
    p.add_argument("--family", required=True,
                   help="e.g. real-moment, sphere-lift:2, 'AFFINE_LIFT(IDENTITY(2))'")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--arithmetic", choices=("exact", "float"), default="exact")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--bound", type=int, default=1000, help="numerator/denominator bound")
    p.add_argument("--affine", action="store_true", help="test affine k-regularity instead")
    p.add_argument("--expect", choices=("clean",), help="exit 1 on any counterexample")
    _add_format(p)
    p.set_defaults(handler=cmd_verify_map)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler: Callable = args.handler
    try:
        text, status = handler(args)
    except (UsageError, ValueError, TypeError) as exc:
        parser.print_usage(stderr)
        print(f"hre: error: {exc}", file=stderr)
        return 2
    except TermLimitError as exc:
        print(f"hre: error: {exc}", file=stderr)
        return 1
    stdout.write(text)
    return status


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
