"""Command line front end: ``numbers``, ``poly``, ``check`` and ``connect``.

Exit status is 0 on success, 1 when at least one identity check fails and
2 for an invalid invocation.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import formats, identities
from .families import FAMILY_KINDS, FamilyTag, family_polynomial, poly_bernoulli_number
from .formats import rational_latex, rational_str
from .identities import DEFAULT_LAMBDAS, IDENTITIES, GridSpec
from .umbral import connection_appell

log = logging.getLogger("polybern")

HEADROOM = 2


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _add_family_flags(parser, prefix: str = "", required_family: bool = True):
    dest = prefix.replace("-", "_")
    flag = f"--{prefix}family" if prefix else "--family"
    parser.add_argument(flag, dest=f"{dest}family", choices=FAMILY_KINDS, required=required_family)
    parser.add_argument(f"--{prefix}k", dest=f"{dest}k", type=int, help="poly-Bernoulli index k")
    parser.add_argument(f"--{prefix}r", dest=f"{dest}r", type=int, help="order r")
    parser.add_argument(f"--{prefix}lambda", dest=f"{dest}lam", type=_rational,
                        help="Frobenius-Euler parameter (exact rational, not 1)")


def _family_from_args(parser, args, prefix: str = "") -> FamilyTag:
    dest = prefix.replace("-", "_")
    kind = getattr(args, f"{dest}family")
    k, r, lam = (getattr(args, f"{dest}{name}") for name in ("k", "r", "lam"))
    if kind == "poly-bernoulli" and k is None:
        k = 1
    if kind != "poly-bernoulli" and r is None:
        r = 1
    try:
        return FamilyTag(kind, k=k if kind == "poly-bernoulli" else None,
                         r=None if kind == "poly-bernoulli" else r,
                         lam=lam if kind == "frobenius-euler" else None)
    except ValueError as exc:
        parser.error(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=formats.FORMATS, default="json")
    common.add_argument("--out", metavar="PATH", help="write the output stream to PATH")

    parser = argparse.ArgumentParser(
        prog="polybern",
        description="Exact poly-Bernoulli numbers, polynomials and identity checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", parents=[common], help="table of poly-Bernoulli numbers")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("poly", parents=[common], help="coefficients of one family polynomial")
    _add_family_flags(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("check", parents=[common], help="verify identities over a grid")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--k-min", type=int, default=-4)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--r-max", type=int, default=4)
    p.add_argument("--lambda", dest="lambdas", type=_rational, action="append",
                   help="Frobenius-Euler parameter; repeatable")
    p.add_argument("--identity", dest="identities", choices=IDENTITIES, action="append",
                   help="restrict to these identities; repeatable")

    p = sub.add_parser("connect", parents=[common], help="connection matrix between two families")
    _add_family_flags(p, "source-")
    _add_family_flags(p, "target-")
    p.add_argument("--n", type=int, required=True)
    return parser


def _numbers(args) -> tuple[str, int]:
    rows = [(n, poly_bernoulli_number(n, args.k)) for n in range(args.n_max + 1)]
    if args.format == "json":
        body = {"k": args.k, "numbers": [{"n": n, "value": rational_str(v)} for n, v in rows]}
        return formats.dumps(body) + "\n", 0
    if args.format == "csv":
        return formats.csv_text(["n", "value"], [[n, rational_str(v)] for n, v in rows]), 0
    return formats.latex_table(
        "rr", ["$n$", f"$B_n^{{({args.k})}}$"], [[str(n), f"${rational_latex(v)}$"] for n, v in rows]
    ), 0


def _poly(args, tag: FamilyTag) -> tuple[str, int]:
    p = family_polynomial(tag, args.n)
    coeffs = [p[j] for j in range(args.n + 1)]
    if args.format == "json":
        body = {
            "family": tag.kind,
            "params": {k: formats.param_value(v) for k, v in tag.params().items()},
            "n": args.n,
            "coeffs": [rational_str(c) for c in coeffs],
        }
        return formats.dumps(body) + "\n", 0
    if args.format == "csv":
        return formats.csv_text(["power", "coeff"], [[j, rational_str(c)] for j, c in enumerate(coeffs)]), 0
    return f"$${formats.poly_latex(p)}$$\n", 0


def _check(args, parser) -> tuple[str, int]:
    if args.n_max < 0 or args.k_min > args.k_max or args.r_max < 0:
        parser.error("grid ranges must be non-empty")
    try:
        spec = GridSpec(
            n_range=range(0, args.n_max + 1),
            k_range=range(args.k_min, args.k_max + 1),
            r_range=range(0, args.r_max + 1),
            lambdas=tuple(args.lambdas) if args.lambdas else DEFAULT_LAMBDAS,
            identities=tuple(args.identities) if args.identities else IDENTITIES,
        )
    except ValueError as exc:
        parser.error(str(exc))
    reports = identities.run_grid(spec)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        log.warning("FAIL %s %s", r.identity, r.params)
    print(f"checked {len(reports)}: {len(reports) - len(failed)} passed, {len(failed)} failed",
          file=sys.stderr)
    if args.format == "json":
        text = "".join(formats.dumps(formats.report_record(r)) + "\n" for r in reports)
    elif args.format == "csv":
        text = formats.csv_text(["identity", "params", "pass", "lhs", "rhs"],
                                [formats.report_csv_row(r) for r in reports])
    else:
        rows = [
            [r.identity, ", ".join(f"{k}={formats.param_value(v)}" for k, v in r.params.items()),
             "pass" if r.passed else "FAIL"]
            for r in reports
        ]
        text = formats.latex_table("llc", ["identity", "parameters", "result"], rows)
    return text, 1 if failed else 0


def _connect(args, source: FamilyTag, target: FamilyTag) -> tuple[str, int]:
    cap = args.n + HEADROOM
    matrix = connection_appell(source.appell(cap), target.appell(cap), args.n)
    rows = [list(row) for row in matrix.entries]
    if args.format == "json":
        body = {
            "source": source.label,
            "target": target.label,
            "n": args.n,
            "matrix": [[rational_str(c) for c in row] for row in rows],
        }
        return formats.dumps(body) + "\n", 0
    if args.format == "csv":
        header = ["n"] + [f"m{m}" for m in range(args.n + 1)]
        return formats.csv_text(header, [[i] + [rational_str(c) for c in row] for i, row in enumerate(rows)]), 0
    body = " \\\\\n".join(" & ".join(rational_latex(c) for c in row) for row in rows)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n", 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        if args.command == "numbers":
            if args.n_max < 0:
                parser.error("--n-max must be non-negative")
            text, status = _numbers(args)
        elif args.command == "poly":
            tag = _family_from_args(parser, args)
            if args.n < 0:
                parser.error("--n must be non-negative")
            text, status = _poly(args, tag)
        elif args.command == "check":
            text, status = _check(args, parser)
        else:
            if args.n < 0:
                parser.error("--n must be non-negative")
            source = _family_from_args(parser, args, "source-")
            target = _family_from_args(parser, args, "target-")
            text, status = _connect(args, source, target)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
