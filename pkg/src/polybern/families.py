"""Concrete number and polynomial families.

Poly-Bernoulli polynomials are produced from the Stirling-number closed form;
:func:`poly_bernoulli_polynomial_alternating`,
:func:`poly_bernoulli_polynomial_umbral` and
:func:`poly_bernoulli_polynomial_binomial` are independent routes kept for
cross-checking.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polynomial import Polynomial
from .series import (
    EULER,
    FROBENIUS_EULER,
    HIGHER_BERNOULLI,
    Series,
    gf_family,
    gf_poly_bernoulli,
    inverse_power,
    series_inverse,
)
from .umbral import AppellFamily, apply, appell_polynomial

POLY_BERNOULLI = "poly-bernoulli"
FAMILY_KINDS = (POLY_BERNOULLI, HIGHER_BERNOULLI, EULER, FROBENIUS_EULER)


@dataclass(frozen=True)
class FamilyTag:
    kind: str
    k: int | None = None
    r: int | None = None
    lam: Fraction | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.kind == POLY_BERNOULLI:
            if self.k is None:
                raise ValueError("poly-bernoulli needs k")
            return
        if self.r is None or self.r < 0:
            raise ValueError(f"{self.kind} needs an order r >= 0")
        if self.kind == FROBENIUS_EULER:
            if self.lam is None:
                raise ValueError("frobenius-euler needs lambda")
            object.__setattr__(self, "lam", Fraction(self.lam))
            if self.lam == 1:
                raise ValueError("frobenius-euler is undefined at lambda = 1")

    @classmethod
    def poly_bernoulli(cls, k: int) -> FamilyTag:
        return cls(POLY_BERNOULLI, k=k)

    @classmethod
    def higher_bernoulli(cls, r: int) -> FamilyTag:
        return cls(HIGHER_BERNOULLI, r=r)

    @classmethod
    def euler(cls, r: int) -> FamilyTag:
        return cls(EULER, r=r)

    @classmethod
    def frobenius_euler(cls, r: int, lam) -> FamilyTag:
        return cls(FROBENIUS_EULER, r=r, lam=Fraction(lam))

    @property
    def label(self) -> str:
        if self.kind == POLY_BERNOULLI:
            return f"{self.kind}(k={self.k})"
        if self.kind == FROBENIUS_EULER:
            return f"{self.kind}(r={self.r}, lambda={self.lam})"
        return f"{self.kind}(r={self.r})"

    def params(self) -> dict:
        if self.kind == POLY_BERNOULLI:
            return {"k": self.k}
        if self.kind == FROBENIUS_EULER:
            return {"r": self.r, "lambda": self.lam}
        return {"r": self.r}

    def generating_factor(self, cap: int) -> Series:
        if self.kind == POLY_BERNOULLI:
            return gf_poly_bernoulli(self.k, cap)
        return gf_family(self.kind, r=self.r, lam=self.lam, cap=cap)

    def appell(self, cap: int) -> AppellFamily:
        return _appell_family(self, cap)


@lru_cache(maxsize=None)
def _appell_family(tag: FamilyTag, cap: int) -> AppellFamily:
    return AppellFamily.from_generating_factor(tag.generating_factor(cap), tag.label)


def falling_factorial(a, n: int) -> Fraction:
    """``(a)_n = a (a-1) ... (a-n+1)``; ``(a)_0 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a - i
    return out


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1) + (0,)
    return (0,) + tuple(m * prev[m] + prev[m - 1] for m in range(1, n + 1))


def stirling2(n: int, m: int) -> int:
    """Stirling numbers of the second kind; 0 outside ``0 <= m <= n``."""
    if n < 0 or m < 0 or m > n:
        return 0
    for i in range(0, n, 256):  # warm the cache in chunks to bound recursion depth
        _stirling2_row(i)
    return _stirling2_row(n)[m]


def stirling2_table(n_max: int) -> list[tuple[int, ...]]:
    return [tuple(stirling2(n, m) for m in range(n + 1)) for n in range(n_max + 1)]


@lru_cache(maxsize=None)
def _bernoulli_numbers(cap: int) -> Series:
    return series_inverse(Series(tuple(Fraction(1, j + 1) for j in range(cap + 1))))


def bernoulli_number(n: int) -> Fraction:
    """``B_n`` from ``t/(e^t - 1)``, so ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _bernoulli_numbers(max(n, 16))[n]


@lru_cache(maxsize=None)
def poly_bernoulli_polynomial(n: int, k: int) -> Polynomial:
    """Poly-Bernoulli polynomial via its Stirling-number closed form.

    The coefficient of ``x^l`` is
    ``C(n,l) sum_{m=0}^{n-l} (-1)^{n-m-l} m! S2(n-l,m) / (m+1)^k``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = []
    for l in range(n + 1):
        s = Fraction(0)
        for m in range(n - l + 1):
            term = math.factorial(m) * stirling2(n - l, m) * inverse_power(m + 1, k)
            s += -term if (n - m - l) % 2 else term
        coeffs.append(math.comb(n, l) * s)
    return Polynomial(tuple(coeffs))


@lru_cache(maxsize=None)
def poly_bernoulli_number(n: int, k: int) -> Fraction:
    """Value at ``x = 0`` of the poly-Bernoulli polynomial."""
    if n < 0:
        raise ValueError("n must be non-negative")
    s = Fraction(0)
    for m in range(n + 1):
        term = math.factorial(m) * stirling2(n, m) * inverse_power(m + 1, k)
        s += -term if (n - m) % 2 else term
    return s


def poly_bernoulli_polynomial_alternating(n: int, k: int) -> Polynomial:
    """``sum_{m<=n} (m+1)^{-k} sum_{j<=m} (-1)^j C(m,j) (x-j)^n``."""
    total = Polynomial()
    for m in range(n + 1):
        inner = Polynomial()
        for j in range(m + 1):
            inner = inner + Polynomial.shifted_power(-j, n) * ((-1) ** j * math.comb(m, j))
        total = total + inner * inverse_power(m + 1, k)
    return total


def poly_bernoulli_polynomial_umbral(n: int, k: int) -> Polynomial:
    """Generating factor applied as an operator to ``x^n``."""
    return apply(gf_poly_bernoulli(k, n), Polynomial.monomial(n))


def poly_bernoulli_polynomial_binomial(n: int, k: int) -> Polynomial:
    """``sum_l C(n,l) B_{n-l}^{(k)} x^l`` from the numbers alone."""
    return Polynomial(
        tuple(math.comb(n, l) * poly_bernoulli_number(n - l, k) for l in range(n + 1))
    )


@lru_cache(maxsize=None)
def family_polynomial(tag: FamilyTag, n: int) -> Polynomial:
    """Degree-``n`` member of the tagged Appell family."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if tag.kind == POLY_BERNOULLI:
        return poly_bernoulli_polynomial(n, tag.k)
    return appell_polynomial(tag.appell(n), n)
