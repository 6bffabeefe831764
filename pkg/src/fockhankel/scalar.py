"""Exact scalars: Laurent polynomials in t = sqrt(m) with rational coefficients.

Every inner product, norm and projection coefficient produced by this package
lives in this ring, so the Fock parameter ``m`` stays symbolic until a caller
asks for a number.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "as_rational", "as_positive_rational", "evaluate"]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def as_positive_rational(m) -> Fraction:
    m = as_rational(m)
    if m <= 0:
        raise ValueError(f"Fock parameter m must be positive, got {m}")
    return m


def _exact_sqrt(q: Fraction) -> Fraction | None:
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


class Scalar:
    """Finite sum ``sum_h c_h t**h`` with ``c_h`` rational and ``t**2 = m``.

    Instances are immutable and kept canonical (no zero coefficients), so
    ``==`` is exact equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            terms = dict(value._terms)
        elif isinstance(value, dict):
            terms = {}
            for h, c in value.items():
                c = as_rational(c)
                if c:
                    terms[int(h)] = c
        else:
            c = as_rational(value)
            terms = {0: c} if c else {}
        self._terms = terms
        self._hash = None

    @classmethod
    def _from_canonical(cls, terms: dict) -> Scalar:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff, h: int) -> Scalar:
        """``coeff * t**h``."""
        c = as_rational(coeff)
        return cls._from_canonical({int(h): c} if c else {})

    @classmethod
    def m_power(cls, k: int, coeff=1) -> Scalar:
        """``coeff * m**k``; ``k`` may be negative."""
        return cls.monomial(coeff, 2 * k)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_unit(self) -> bool:
        """True for a nonzero monomial, the only invertible scalars here."""
        return len(self._terms) == 1

    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for h, c in other._terms.items():
            v = terms.get(h, 0) + c
            if v:
                terms[h] = v
            else:
                terms.pop(h, None)
        return Scalar._from_canonical(terms)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._from_canonical({h: -c for h, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[int, Fraction] = {}
        for h1, c1 in self._terms.items():
            for h2, c2 in other._terms.items():
                h = h1 + h2
                terms[h] = terms.get(h, 0) + c1 * c2
        return Scalar._from_canonical({h: c for h, c in terms.items() if c})

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self!r} is not a unit (only c*t^h can be inverted)")
        ((h, c),) = self._terms.items()
        return Scalar._from_canonical({-h: 1 / c})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------

    def exact_at(self, m) -> Fraction:
        """Exact rational value at a rational ``m > 0``.

        Odd powers of ``t`` need ``sqrt(m)`` rational; otherwise ValueError.
        """
        m = as_positive_rational(m)
        odd = any(h % 2 for h in self._terms)
        t = _exact_sqrt(m) if odd else None
        if odd and t is None:
            raise ValueError(f"sqrt({m}) is irrational; {self!r} has odd powers of t")
        total = Fraction(0)
        for h, c in self._terms.items():
            total += c * (t**h if odd else m ** (h // 2))
        return total

    def evaluate(self, m) -> float:
        """Floating-point value at ``m > 0``."""
        if isinstance(m, float):
            if not m > 0:
                raise ValueError(f"Fock parameter m must be positive, got {m}")
            return math.fsum(float(c) * m ** (h / 2) for h, c in self._terms.items())
        m = as_positive_rational(m)
        if all(h % 2 == 0 for h in self._terms):
            return float(self.exact_at(m))
        root = math.sqrt(m)
        return math.fsum(float(c) * root**h for h, c in self._terms.items())

    def sign_at(self, m) -> int:
        """Exact sign at rational ``m``, also when ``sqrt(m)`` is irrational."""
        m = as_positive_rational(m)
        # value = even + sqrt(m) * odd, both rational
        even = sum((c * m ** (h // 2) for h, c in self._terms.items() if h % 2 == 0), Fraction(0))
        odd = sum((c * m ** ((h - 1) // 2) for h, c in self._terms.items() if h % 2), Fraction(0))
        se, so = (even > 0) - (even < 0), (odd > 0) - (odd < 0)
        if se == so or so == 0:
            return se
        if se == 0:
            return so
        a, b = even * even, m * odd * odd
        return se if a > b else (so if b > a else 0)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [[h, f"{c.numerator}/{c.denominator}"] for h, c in self.items()]
        }

    @classmethod
    def from_json(cls, obj: dict) -> Scalar:
        return cls({int(h): Fraction(c) for h, c in obj["terms"]})

    def __repr__(self):
        if not self._terms:
            return "Scalar(0)"
        parts = []
        for h, c in self.items():
            if h == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"t^{h}")
            else:
                parts.append(f"{c}*t^{h}")
        return "Scalar(" + " + ".join(parts) + ")"


def evaluate(a: Scalar, m) -> float:
    """Module-level form of :meth:`Scalar.evaluate`."""
    return Scalar(a).evaluate(m)
