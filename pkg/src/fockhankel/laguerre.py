"""Generalized Laguerre polynomials, their Gamma-weighted moments, and the two
binomial identities behind the norm formula.

Binomials follow the zero convention: ``binom(a, b) = 0`` whenever ``b < 0``
or ``b > a >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

__all__ = [
    "LaguerrePoly",
    "MomentTriple",
    "binom",
    "laguerre_coeffs",
    "laguerre_eval",
    "moment_I",
    "moment_I_closed",
    "identity_gould",
    "identity_vandermonde",
]


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _check_nonneg(**kw):
    for name, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")


@dataclass(frozen=True)
class LaguerrePoly:
    """Exact coefficients of ``L_k^alpha(y) = sum_i coeffs[i] * y**i``."""

    k: int
    alpha: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, y):
        """Exact evaluation at a rational point (Horner)."""
        y = Fraction(y)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class MomentTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        _check_nonneg(a=self.a, b=self.b, c=self.c)

    def value(self) -> Fraction:
        return moment_I(self.a, self.b, self.c)


@lru_cache(maxsize=None)
def laguerre_coeffs(k: int, alpha: int) -> LaguerrePoly:
    """``c_i = (-1)**i * binom(k + alpha, k - i) / i!`` for ``i = 0..k``."""
    _check_nonneg(k=k, alpha=alpha)
    coeffs = tuple(
        Fraction((-1) ** i * binom(k + alpha, k - i), factorial(i)) for i in range(k + 1)
    )
    return LaguerrePoly(k, alpha, coeffs)


def laguerre_eval(k: int, alpha: int, x):
    """Evaluate ``L_k^alpha(x)`` in floating point by the three-term recurrence

        (j+1) L_{j+1} = (2j + 1 + alpha - x) L_j - (j + alpha) L_{j-1}

    Accepts scalars or numpy arrays.
    """
    _check_nonneg(k=k, alpha=alpha)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if k == 0:
        return prev if prev.ndim else float(prev)
    cur = (alpha + 1.0) - x
    for j in range(1, k):
        prev, cur = cur, ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1)
    return cur if cur.ndim else float(cur)


@lru_cache(maxsize=None)
def moment_I(a: int, b: int, c: int) -> Fraction:
    """``I_{a,b,c} = int_0^inf y**a L_b^c(y) e**(-y) dy``, expanded termwise:

        sum_{i=0}^{b} (-1)**i binom(b+c, b-i) (a+i)! / i!
    """
    _check_nonneg(a=a, b=b, c=c)
    total = 0
    for i in range(b + 1):
        total += (-1) ** i * binom(b + c, b - i) * (factorial(a + i) // factorial(i))
    return Fraction(total)


def moment_I_closed(n: int, r: int, s: int) -> Fraction:
    """Closed form of ``I_{n, r, n-s}``: ``s! (r+n-s)! / r! * (-1)**r * binom(n, s-r)``."""
    _check_nonneg(n=n, r=r, s=s)
    if n < s:
        raise ValueError(f"closed form needs n >= s, got n={n}, s={s}")
    return Fraction(
        factorial(s) * factorial(r + n - s) * (-1) ** r * binom(n, s - r), factorial(r)
    )


def identity_gould(r: int, n: int, s: int) -> bool:
    """``sum_i (-1)**i binom(r, i) binom(n+i, s) == (-1)**r binom(n, s-r)``."""
    _check_nonneg(r=r, n=n, s=s)
    lhs = sum((-1) ** i * binom(r, i) * binom(n + i, s) for i in range(r + 1))
    return lhs == (-1) ** r * binom(n, s - r)


def identity_vandermonde(n: int, s: int) -> bool:
    """``sum_r binom(n, s-r) binom(s, r) == binom(n+s, s)``."""
    _check_nonneg(n=n, s=s)
    return sum(binom(n, s - r) * binom(s, r) for r in range(s + 1)) == binom(n + s, s)
