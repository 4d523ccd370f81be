"""Umbral pairing, operator action and Appell machinery.

A series ``f(t)`` acts on polynomials in two ways: as the linear functional
``<f(t) | p(x)>`` and as the operator ``f(t) p(x) = sum a_k/k! p^(k)(x)``.
Everything here specialises Sheffer theory to Appell pairs ``(g(t), t)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .polynomial import Polynomial
from .report import CheckReport
from .series import (
    Series,
    TruncationError,
    series_derivative,
    series_inverse,
    series_mul,
    truncate,
)


def _require_cap(f: Series, p: Polynomial):
    if p.degree > f.cap:
        raise TruncationError(
            f"polynomial of degree {p.degree} needs a series known to order {p.degree}, got {f.cap}"
        )


def pair(f: Series, p: Polynomial) -> Fraction:
    """``<f(t) | p(x)>``; with EGF storage this is ``sum_j p_j a_j``."""
    _require_cap(f, p)
    return sum((c * f[j] for j, c in enumerate(p.coeffs)), Fraction(0))


def apply(f: Series, p: Polynomial) -> Polynomial:
    """Operator action ``f(t) p(x) = sum_k (a_k / k!) p^(k)(x)``."""
    _require_cap(f, p)
    cs = p.coeffs
    out = []
    for i in range(len(cs)):
        s = Fraction(0)
        for j in range(i, len(cs)):
            if cs[j] and f[j - i]:
                s += cs[j] * math.comb(j, i) * f[j - i]
        out.append(s)
    return Polynomial(tuple(out))


@dataclass(frozen=True)
class AppellFamily:
    """The Appell pair ``(g(t), t)``; ``g`` must be invertible."""

    g: Series
    name: str = ""

    def __post_init__(self):
        if self.g[0] == 0:
            raise ValueError("Appell family needs an invertible g (nonzero constant term)")

    @classmethod
    def from_generating_factor(cls, factor: Series, name: str = "") -> AppellFamily:
        """Family whose generating function is ``factor(t) e^{xt}``, i.e. ``g = 1/factor``."""
        return cls(series_inverse(factor), name)

    @property
    def cap(self) -> int:
        return self.g.cap

    @cached_property
    def generating_factor(self) -> Series:
        return series_inverse(self.g)


def appell_polynomial(fam: AppellFamily, n: int) -> Polynomial:
    """``s_n(x) = g(t)^{-1} x^n``."""
    if n > fam.cap:
        raise TruncationError(f"degree {n} exceeds the family's cap {fam.cap}")
    return apply(fam.generating_factor, Polynomial.monomial(n))


def log_derivative(g: Series) -> Series:
    """``g'(t)/g(t)``, known to one order less than ``g``."""
    dg = series_derivative(g)
    return series_mul(dg, series_inverse(truncate(g, dg.cap)))


def appell_step(fam: AppellFamily, s_n: Polynomial) -> Polynomial:
    """``s_{n+1}(x) = (x - g'(t)/g(t)) s_n(x)``."""
    if s_n.degree >= fam.cap:
        raise TruncationError("family cap exhausted; rebuild it with a larger cap")
    return s_n.mul_x() - apply(log_derivative(fam.g), s_n)


@dataclass(frozen=True)
class ConnectionMatrix:
    """Lower-triangular ``entries[N][m] = c_{N,m}`` with ``s_N = sum_m c_{N,m} r_m``."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.entries[n]

    def __getitem__(self, idx):
        n, m = idx
        return self.entries[n][m]

    def __matmul__(self, other: ConnectionMatrix) -> ConnectionMatrix:
        size = self.size
        if other.size != size:
            raise ValueError("matrix sizes differ")
        return ConnectionMatrix(
            tuple(
                tuple(
                    sum((self.entries[i][j] * other.entries[j][m] for j in range(size)), Fraction(0))
                    for m in range(size)
                )
                for i in range(size)
            )
        )

    @classmethod
    def identity(cls, size: int) -> ConnectionMatrix:
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size))
        )


def connection_appell(source: AppellFamily, target: AppellFamily, n: int) -> ConnectionMatrix:
    """Coefficients expressing ``source`` polynomials in the ``target`` basis, degrees ``0..n``.

    ``c_{N,m} = C(N,m) b_{N-m}`` where ``b`` are the coefficients of
    ``h(t)/g(t)``, ``h`` being the target's ``g`` and ``g`` the source's.
    """
    if n > source.cap or n > target.cap:
        raise TruncationError(f"degree {n} exceeds a family cap")
    ratio = series_mul(truncate(target.g, n), series_inverse(truncate(source.g, n)))
    zero = Fraction(0)
    return ConnectionMatrix(
        tuple(
            tuple(math.comb(N, m) * ratio[N - m] if m <= N else zero for m in range(n + 1))
            for N in range(n + 1)
        )
    )


def sheffer_orthogonality_check(fam: AppellFamily, n_max: int) -> CheckReport:
    """Check ``<g(t) t^k | s_n(x)> = n! delta_{n,k}`` for ``0 <= n, k <= n_max``."""
    if n_max > fam.cap:
        raise TruncationError(f"n_max {n_max} exceeds the family's cap {fam.cap}")
    cap = fam.cap
    polys = [appell_polynomial(fam, n) for n in range(n_max + 1)]
    lhs, rhs, failures = [], [], []
    for k in range(n_max + 1):
        functional = series_mul(fam.g, Series.monomial(k, cap))
        for n, s_n in enumerate(polys):
            got = pair(functional, s_n)
            want = Fraction(math.factorial(n)) if n == k else Fraction(0)
            lhs.append(got)
            rhs.append(want)
            if got != want:
                failures.append((f"n={n}, k={k}", got, want))
    return CheckReport(
        "sheffer-orthogonality",
        {"family": fam.name, "n_max": n_max},
        tuple(lhs),
        tuple(rhs),
        not failures,
        failures,
    )
