"""Dense univariate polynomials in ``x`` with exact rational coefficients."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Polynomial:
    """``coeffs[j]`` is the coefficient of ``x^j``.

    Trailing zeros are stripped on construction, so equality of two
    polynomials is equality of their coefficient tuples.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, n: int, c=1) -> Polynomial:
        return cls((0,) * n + (c,))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def shifted_power(cls, a, n: int) -> Polynomial:
        """``(x + a)^n`` expanded."""
        a = Fraction(a)
        return cls(tuple(math.comb(n, j) * a ** (n - j) for j in range(n + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}" if mono else f"{abs(c)}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, value) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[j] + other[j] for j in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(tuple(c * a for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def mul_x(self) -> Polynomial:
        """Multiplication by ``x`` as a coefficient shift."""
        if not self.coeffs:
            return self
        return Polynomial((Fraction(0),) + self.coeffs)

    def derivative(self, k: int = 1) -> Polynomial:
        cs = self.coeffs
        return Polynomial(
            tuple(cs[j] * math.perm(j, k) for j in range(k, len(cs)))
        )


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)
