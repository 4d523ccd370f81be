"""Truncated exponential power series over the rationals.

A :class:`Series` stores the coefficients ``a_k`` of

    f(t) = a_0 + a_1 t + a_2 t^2/2! + ... + a_N t^N/N!

so that ``a_k`` is exactly the value of the functional ``f`` on ``x^k``.
Every value carries its own truncation order ``N`` (``cap``); binary
operations insist on equal caps instead of silently re-truncating.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Rational = Fraction

HIGHER_BERNOULLI = "higher-bernoulli"
EULER = "euler"
FROBENIUS_EULER = "frobenius-euler"


class TruncationError(ValueError):
    """Raised when caps disagree or a result would need terms beyond the cap."""


@dataclass(frozen=True)
class Series:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{body}])"

    # constructors

    @classmethod
    def zero(cls, cap: int) -> Series:
        return cls((Fraction(0),) * (cap + 1))

    @classmethod
    def constant(cls, c, cap: int) -> Series:
        return cls((Fraction(c),) + (Fraction(0),) * cap)

    @classmethod
    def one(cls, cap: int) -> Series:
        return cls.constant(1, cap)

    @classmethod
    def monomial(cls, k: int, cap: int) -> Series:
        """The series ``t^k``; its EGF coefficient at ``k`` is ``k!``."""
        coeffs = [Fraction(0)] * (cap + 1)
        if k <= cap:
            coeffs[k] = Fraction(math.factorial(k))
        return cls(tuple(coeffs))

    @classmethod
    def exp(cls, y, cap: int) -> Series:
        """``e^{yt}``."""
        y = Fraction(y)
        return cls(tuple(y**k for k in range(cap + 1)))

    @classmethod
    def from_ordinary(cls, coeffs: Iterable, cap: int | None = None) -> Series:
        """Build from ordinary coefficients ``c_k`` of ``t^k`` (no factorials)."""
        coeffs = [Fraction(c) for c in coeffs]
        if cap is None:
            cap = len(coeffs) - 1
        coeffs = (coeffs + [Fraction(0)] * (cap + 1))[: cap + 1]
        return cls(tuple(c * math.factorial(k) for k, c in enumerate(coeffs)))

    def ordinary(self) -> list[Fraction]:
        """Ordinary coefficients ``a_k / k!``."""
        return [c / math.factorial(k) for k, c in enumerate(self.coeffs)]

    # operator sugar

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other, self.cap)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other, self.cap)
        return series_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        c = Fraction(other)
        return Series(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, r: int):
        return series_pow(self, r)


def _check_caps(f: Series, g: Series):
    if f.cap != g.cap:
        raise TruncationError(f"truncation orders differ: {f.cap} != {g.cap}")


def order(f: Series) -> float | int:
    """Index of the first nonzero coefficient; ``math.inf`` for the zero series."""
    for k, c in enumerate(f.coeffs):
        if c:
            return k
    return math.inf


def truncate(f: Series, cap: int) -> Series:
    if cap > f.cap:
        raise TruncationError(f"cannot extend a series known to order {f.cap} up to {cap}")
    return Series(f.coeffs[: cap + 1])


def series_add(f: Series, g: Series) -> Series:
    _check_caps(f, g)
    return Series(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def series_mul(f: Series, g: Series) -> Series:
    """Binomial (EGF) convolution of two series."""
    _check_caps(f, g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(f.cap + 1):
        s = Fraction(0)
        for j in range(n + 1):
            if a[j] and b[n - j]:
                s += math.comb(n, j) * a[j] * b[n - j]
        out.append(s)
    return Series(tuple(out))


def series_pow(f: Series, r: int) -> Series:
    if r < 0:
        return series_pow(series_inverse(f), -r)
    result = Series.one(f.cap)
    base = f
    while r:
        if r & 1:
            result = series_mul(result, base)
        r >>= 1
        if r:
            base = series_mul(base, base)
    return result


def series_inverse(f: Series) -> Series:
    """Multiplicative inverse of an invertible series (nonzero constant term)."""
    a = f.coeffs
    if a[0] == 0:
        raise ValueError("series is not invertible: constant coefficient is zero")
    inv0 = 1 / a[0]
    out = [inv0]
    for n in range(1, f.cap + 1):
        s = Fraction(0)
        for j in range(1, n + 1):
            if a[j]:
                s += math.comb(n, j) * a[j] * out[n - j]
        out.append(-s * inv0)
    return Series(tuple(out))


def series_derivative(f: Series) -> Series:
    """Formal ``d/dt``; the result is known one order less than ``f``."""
    if f.cap == 0:
        raise TruncationError("derivative of an order-0 truncation is unknown")
    return Series(f.coeffs[1:])


def series_compose(f: Series, g: Series) -> Series:
    """``f(g(t))`` for ``g`` of order >= 1, by Horner's rule over truncated powers."""
    _check_caps(f, g)
    if g.coeffs[0] != 0:
        raise ValueError("composition needs a series with zero constant term")
    ordinary = f.ordinary()
    result = Series.constant(ordinary[-1], f.cap)
    for c in reversed(ordinary[:-1]):
        result = series_mul(result, g) + c
    return result


def inverse_power(m: int, k: int) -> Fraction:
    """``1 / m^k`` for any integer ``k``, exactly."""
    if k >= 0:
        return Fraction(1, m**k)
    return Fraction(m ** (-k))


def one_minus_exp_neg(cap: int) -> Series:
    """``1 - e^{-t}``."""
    return Series((Fraction(0),) + tuple(Fraction((-1) ** (n + 1)) for n in range(1, cap + 1)))


def polylog_delta_series(k: int, cap: int) -> Series:
    """``Li_k(1 - e^{-t})`` truncated at ``cap``, for any integer ``k``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    z = one_minus_exp_neg(cap)
    total = Series.zero(cap)
    power = Series.one(cap)
    for m in range(1, cap + 1):
        power = series_mul(power, z)
        total = series_add(total, power * inverse_power(m, k))
    return total


def gf_poly_bernoulli(k: int, cap: int) -> Series:
    """``Li_k(1 - e^{-t}) / (1 - e^{-t})``; coefficient ``n`` is the poly-Bernoulli number.

    Uses ``Li_k(z)/z = sum_{m>=0} z^m / (m+1)^k`` so no division by a delta
    series is needed.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    z = one_minus_exp_neg(cap)
    total = Series.one(cap)
    power = Series.one(cap)
    for m in range(1, cap + 1):
        power = series_mul(power, z)
        total = series_add(total, power * inverse_power(m + 1, k))
    return total


def gf_family(which: str, r: int = 1, lam=None, cap: int = 0) -> Series:
    """x-free generating factor of a classical Appell family, truncated at ``cap``.

    ``which`` is one of ``"higher-bernoulli"`` for (t/(e^t-1))^r, ``"euler"``
    for (2/(e^t+1))^r, ``"frobenius-euler"`` for ((1-lam)/(e^t-lam))^r.
    """
    if r < 0:
        raise ValueError("order r must be non-negative")
    if which == HIGHER_BERNOULLI:
        # (e^t - 1)/t = sum t^n/(n+1)!
        base = Series(tuple(Fraction(1, n + 1) for n in range(cap + 1)))
    elif which == EULER:
        base = Series((Fraction(1),) + (Fraction(1, 2),) * cap)
    elif which == FROBENIUS_EULER:
        if lam is None:
            raise ValueError("frobenius-euler needs lambda")
        lam = Fraction(lam)
        if lam == 1:
            raise ValueError("frobenius-euler is undefined at lambda = 1")
        base = Series((Fraction(1),) + (1 / (1 - lam),) * cap)
    else:
        raise ValueError(f"unknown family {which!r}")
    return series_pow(series_inverse(base), r)

