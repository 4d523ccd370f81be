"""Exact verification of the poly-Bernoulli identities over parameter grids.

Each ``check_*`` function builds both sides of one identity as exact
polynomials (or rationals) and returns a :class:`CheckReport`.  Polynomial
equality is coefficient equality in canonical form; nothing is sampled.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .families import (
    FamilyTag,
    bernoulli_number,
    falling_factorial,
    family_polynomial,
    poly_bernoulli_number,
    poly_bernoulli_polynomial,
    stirling2,
)
from .polynomial import Polynomial
from .report import CheckReport
from .series import Series, inverse_power
from .umbral import apply, connection_appell

X = Polynomial.x()
APPELL_SHIFTS = (Fraction(1), Fraction(-2), Fraction(1, 3))


def _sum(polys) -> Polynomial:
    total = Polynomial()
    for p in polys:
        total = total + p
    return total


def check_theorem1(n: int, k: int) -> CheckReport:
    """Recurrence raising the degree by one, with ordinary Bernoulli weights."""
    P = poly_bernoulli_polynomial
    lhs = P(n + 1, k)
    correction = _sum(
        (P(n + 1 - l, k) - P(n + 1 - l, k - 1)) * (math.comb(n + 1, l) * bernoulli_number(l))
        for l in range(n + 2)
    )
    rhs = P(n, k).mul_x() - correction * Fraction(1, n + 1)
    return CheckReport.compare("thm1", {"n": n, "k": k}, lhs, rhs)


def check_corollary2(n: int, k: int) -> CheckReport:
    if n < 1:
        raise ValueError("corollary 2 needs n >= 1")
    P = poly_bernoulli_polynomial
    B = bernoulli_number
    lhs = (
        P(n, k) * (n + 1)
        - (X + Fraction(1, 2)) * P(n - 1, k) * n
        + _sum(P(l, k) * (math.comb(n, l) * B(n - l)) for l in range(n - 1))
    )
    rhs = _sum(P(l, k - 1) * (math.comb(n, l) * B(n - l)) for l in range(n + 1))
    return CheckReport.compare("cor2", {"n": n, "k": k}, lhs, rhs)


def _theorem3_inner(n: int, l: int, k: int) -> Fraction:
    # upper limit n-1 as printed; larger m vanish through S2(n-1-l, m)
    s = Fraction(0)
    for m in range(n):
        term = math.factorial(m + 1) * inverse_power(m + 2, k) * stirling2(n - 1 - l, m)
        s += -term if m % 2 else term
    return s


def check_theorem3(n: int, k: int) -> CheckReport:
    """Degree recurrence expanded in powers of ``x - 1``."""
    if n < 1:
        raise ValueError("theorem 3 needs n >= 1")
    P = poly_bernoulli_polynomial
    lhs = P(n, k)
    tail = _sum(
        Polynomial.shifted_power(-1, l)
        * ((-1) ** (n - 1 - l) * math.comb(n - 1, l) * _theorem3_inner(n, l, k))
        for l in range(n)
    )
    rhs = P(n - 1, k).mul_x() + tail
    return CheckReport.compare("thm3", {"n": n, "k": k}, lhs, rhs)


def check_eq42(n: int, k: int) -> CheckReport:
    """Two evaluations of ``<Li_k(1 - e^{-t}) | x^{n+1}>``."""
    b = poly_bernoulli_number
    lhs = sum(
        ((-1) ** (n - m) * math.comb(n, m) * b(m, k - 1) for m in range(n + 1)), Fraction(0)
    )
    rhs = sum(
        (math.comb(n + 1, m) * (-1) ** (n - m) * b(m, k) for m in range(n + 1)), Fraction(0)
    )
    return CheckReport.compare("eq42", {"n": n, "k": k}, lhs, rhs)


@lru_cache(maxsize=None)
def connection_row(source: FamilyTag, target: FamilyTag, n: int) -> tuple[Fraction, ...]:
    """Row ``n`` of the generic Appell connection matrix from ``source`` to ``target``."""
    return connection_appell(source.appell(n), target.appell(n), n).row(n)


def theorem4_coefficients(n: int, k: int, r: int) -> tuple[Fraction, ...]:
    """Closed-form coefficients of the poly-Bernoulli polynomial in the order-``r`` Bernoulli basis."""
    out = []
    for m in range(n + 1):
        s = Fraction(0)
        for l in range(n - m + 1):
            s += (
                Fraction(math.factorial(r), math.factorial(l + r))
                * falling_factorial(n - m, l)
                * stirling2(l + r, r)
                * poly_bernoulli_number(n - l - m, k)
            )
        out.append(math.comb(n, m) * s)
    return tuple(out)


def theorem5_coefficients(n: int, k: int, r: int) -> tuple[Fraction, ...]:
    P = poly_bernoulli_polynomial
    scale = Fraction(1, 2**r)
    return tuple(
        scale * math.comb(n, m) * sum((math.comb(r, j) * P(n - m, k)(j) for j in range(r + 1)), Fraction(0))
        for m in range(n + 1)
    )


def theorem6_coefficients(n: int, k: int, r: int, lam) -> tuple[Fraction, ...]:
    lam = Fraction(lam)
    if lam == 1:
        raise ValueError("lambda = 1 is excluded")
    P = poly_bernoulli_polynomial
    scale = 1 / (1 - lam) ** r
    return tuple(
        scale
        * math.comb(n, m)
        * sum(
            (math.comb(r, j) * (-lam) ** (r - j) * P(n - m, k)(j) for j in range(r + 1)),
            Fraction(0),
        )
        for m in range(n + 1)
    )


def _connection_report(identity, params, n, k, coeffs, target: FamilyTag) -> CheckReport:
    lhs = poly_bernoulli_polynomial(n, k)
    rhs = _sum(family_polynomial(target, m) * c for m, c in enumerate(coeffs))
    generic = connection_row(FamilyTag.poly_bernoulli(k), target, n)
    extra = []
    if tuple(generic) != tuple(coeffs):
        extra.append(("closed-form coefficients != generic connection", tuple(coeffs), tuple(generic)))
    return CheckReport.compare(identity, params, lhs, rhs, extra)


def check_theorem4(n: int, k: int, r: int) -> CheckReport:
    """Expansion in higher-order Bernoulli polynomials (basis index ``m``)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    coeffs = theorem4_coefficients(n, k, r)
    return _connection_report(
        "thm4", {"n": n, "k": k, "r": r}, n, k, coeffs, FamilyTag.higher_bernoulli(r)
    )


def check_theorem5(n: int, k: int, r: int) -> CheckReport:
    """Expansion in Euler polynomials of order ``r`` (basis index ``m``)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    coeffs = theorem5_coefficients(n, k, r)
    return _connection_report("thm5", {"n": n, "k": k, "r": r}, n, k, coeffs, FamilyTag.euler(r))


def check_theorem6(n: int, k: int, r: int, lam) -> CheckReport:
    """Expansion in Frobenius-Euler polynomials."""
    if r < 0:
        raise ValueError("r must be non-negative")
    lam = Fraction(lam)
    coeffs = theorem6_coefficients(n, k, r, lam)
    return _connection_report(
        "thm6",
        {"n": n, "k": k, "r": r, "lambda": lam},
        n,
        k,
        coeffs,
        FamilyTag.frobenius_euler(r, lam),
    )


def check_appell_basics(n: int, k: int) -> CheckReport:
    """Binomial expansion, Appell shift identity and derivative rule, bundled."""
    if n < 1:
        raise ValueError("needs n >= 1")
    P = poly_bernoulli_polynomial
    b = poly_bernoulli_number
    p = P(n, k)
    lhs, rhs = [], []

    lhs.append(p)
    rhs.append(Polynomial(tuple(math.comb(n, l) * b(n - l, k) for l in range(n + 1))))
    lhs.append(p)
    rhs.append(_sum(Polynomial.monomial(n - l, math.comb(n, l) * b(l, k)) for l in range(n + 1)))

    for y in APPELL_SHIFTS:
        lhs.append(apply(Series.exp(y, n), p))
        rhs.append(_sum(Polynomial.monomial(n - j, math.comb(n, j) * P(j, k)(y)) for j in range(n + 1)))

    lhs.append(p.derivative())
    rhs.append(P(n - 1, k) * n)
    lhs.append(apply(Series.monomial(1, n), p))
    rhs.append(P(n - 1, k) * n)

    labels = ["binomial", "binomial-reversed"] + [f"appell y={y}" for y in APPELL_SHIFTS]
    labels += ["d/dx", "t-action"]
    extra = [(lab, a, c) for lab, a, c in zip(labels, lhs, rhs) if a != c]
    return CheckReport("appell", {"n": n, "k": k}, tuple(lhs), tuple(rhs), not extra, extra)


IDENTITIES = ("thm1", "cor2", "thm3", "eq42", "thm4", "thm5", "thm6", "appell")
DEFAULT_LAMBDAS = (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3))


@dataclass
class GridSpec:
    n_range: range = range(0, 13)
    k_range: range = range(-4, 5)
    r_range: range = range(0, 5)
    lambdas: tuple = DEFAULT_LAMBDAS
    identities: tuple = IDENTITIES

    def __post_init__(self):
        self.lambdas = tuple(Fraction(v) for v in self.lambdas)
        if any(v == 1 for v in self.lambdas):
            raise ValueError("lambda = 1 is excluded from the grid")
        unknown = set(self.identities) - set(IDENTITIES)
        if unknown:
            raise ValueError(f"unknown identities: {sorted(unknown)}")


def _grid_points(spec: GridSpec, identity: str):
    ns, ks, rs, lams = spec.n_range, spec.k_range, spec.r_range, spec.lambdas
    if identity in ("cor2", "thm3", "appell"):
        ns = [n for n in ns if n >= 1]
    if identity in ("thm1", "cor2", "thm3", "eq42", "appell"):
        return itertools.product(ns, ks)
    if identity in ("thm4", "thm5"):
        return itertools.product(ns, ks, rs)
    return itertools.product(ns, ks, rs, lams)


_CHECKS = {
    "thm1": check_theorem1,
    "cor2": check_corollary2,
    "thm3": check_theorem3,
    "eq42": check_eq42,
    "thm4": check_theorem4,
    "thm5": check_theorem5,
    "thm6": check_theorem6,
    "appell": check_appell_basics,
}


def run_grid(spec: GridSpec) -> list[CheckReport]:
    """Every selected check at every grid point, ordered by identity then parameters."""
    reports = []
    for identity in IDENTITIES:
        if identity not in spec.identities:
            continue
        check = _CHECKS[identity]
        for point in _grid_points(spec, identity):
            reports.append(check(*point))
    return reports
