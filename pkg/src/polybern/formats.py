"""Serialisation of exact rationals, polynomials and reports (json, csv, latex)."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .polynomial import Polynomial

FORMATS = ("json", "csv", "latex")


def rational_str(q) -> str:
    """Canonical ``p/q`` (or ``p``) string; ``Fraction`` already reduces and keeps ``q > 0``."""
    return str(Fraction(q))


def rational_latex(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def poly_latex(p: Polynomial) -> str:
    if not p:
        return "0"
    parts = []
    for j in range(p.degree, -1, -1):
        c = p[j]
        if not c:
            continue
        mono = "" if j == 0 else ("x" if j == 1 else f"x^{{{j}}}")
        mag = rational_latex(abs(c))
        body = mono if (mono and abs(c) == 1) else mag + mono
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def to_jsonable(value):
    if isinstance(value, Polynomial):
        return [rational_str(c) for c in value.coeffs]
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return rational_str(value)
    if isinstance(value, (tuple, list)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    return value


def param_value(v):
    return v if isinstance(v, (int, str)) else rational_str(v)


def report_record(report) -> dict:
    record = {
        "identity": report.identity,
        "params": {k: param_value(v) for k, v in report.params.items()},
        "lhs": to_jsonable(report.lhs),
        "rhs": to_jsonable(report.rhs),
        "pass": report.passed,
    }
    if report.failures:
        record["failures"] = [label for label, _, _ in report.failures]
    return record


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _flat(value) -> str:
    if isinstance(value, Polynomial):
        return " ".join(rational_str(c) for c in value.coeffs) or "0"
    if isinstance(value, (tuple, list)):
        return " | ".join(_flat(v) for v in value)
    return rational_str(value)


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def report_csv_row(report) -> list:
    params = ";".join(f"{k}={param_value(v)}" for k, v in report.params.items())
    return [report.identity, params, str(report.passed).lower(), _flat(report.lhs), _flat(report.rhs)]


def latex_table(columns: str, header, rows) -> str:
    lines = [f"\\begin{{tabular}}{{{columns}}}", " & ".join(header) + r" \\", r"\hline"]
    lines += [" & ".join(row) + r" \\" for row in rows]
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"
