"""Polyanalytic polynomials ``sum c_jk zbar**j z**k`` with the Gaussian inner
product of L^2(mu_m), ``d mu_m = (1/pi) exp(-m|z|^2) dA``.

Monomials pair only inside a *sector* ``d = k - j``:

    <zbar^a z^b, zbar^c z^d> = delta_{a+d, b+c} * p! / m**(p+1),   p = a + d

which is what keeps every projection below a finite, exact sum.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .laguerre import laguerre_coeffs
from .scalar import Scalar

__all__ = [
    "PolyPoly",
    "BasisElement",
    "monomial_inner",
    "inner",
    "norm_sq",
    "mul_conj_symbol",
    "dbar",
    "basis_element",
    "sector_basis_F",
    "sector_decompose",
    "random_analytic",
    "random_polypoly",
]


class PolyPoly:
    """Sparse map ``(j, k) -> Scalar`` for ``sum c_jk zbar**j z**k``.

    ``j`` is the antiholomorphic degree, ``k`` the holomorphic one. Zero
    coefficients are never stored, so ``==`` is exact equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (j, k), c in terms.items():
                if j < 0 or k < 0:
                    raise ValueError(f"negative exponent in monomial {(j, k)}")
                c = Scalar(c)
                if c:
                    clean[(int(j), int(k))] = c
        self._terms = clean

    @classmethod
    def _from_canonical(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, j: int, k: int, coeff=1) -> PolyPoly:
        return cls({(j, k): coeff})

    @classmethod
    def analytic(cls, coeffs) -> PolyPoly:
        """``sum_k coeffs[k] z**k``."""
        return cls({(0, k): c for k, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, j: int, k: int) -> Scalar:
        return self._terms.get((j, k), Scalar(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_analytic(self) -> bool:
        return all(j == 0 for j, _ in self._terms)

    def degree(self) -> int:
        """Holomorphic degree; -1 for the zero polynomial."""
        return max((k for _, k in self._terms), default=-1)

    def sectors(self) -> set[int]:
        return {k - j for j, k in self._terms}

    def conj(self) -> PolyPoly:
        """Complex conjugate; coefficients are real so only ``(j, k)`` swap."""
        return PolyPoly._from_canonical({(k, j): c for (j, k), c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, PolyPoly):
            return NotImplemented
        terms = dict(self._terms)
        for key, c in other._terms.items():
            v = terms[key] + c if key in terms else c
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        return PolyPoly._from_canonical(terms)

    def __neg__(self):
        return PolyPoly._from_canonical({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PolyPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> PolyPoly:
        c = Scalar(c)
        if not c:
            return PolyPoly()
        out = {}
        for key, v in self._terms.items():
            w = v * c
            if w:
                out[key] = w
        return PolyPoly._from_canonical(out)

    def __mul__(self, other):
        if isinstance(other, PolyPoly):
            acc: dict = defaultdict(Scalar)
            for (j1, k1), c1 in self._terms.items():
                for (j2, k2), c2 in other._terms.items():
                    acc[(j1 + j2, k1 + k2)] = acc[(j1 + j2, k1 + k2)] + c1 * c2
            return PolyPoly._from_canonical({key: c for key, c in acc.items() if c})
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, PolyPoly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def to_json(self) -> dict:
        return {"terms": [[j, k, c.to_json()] for (j, k), c in self.items()]}

    @classmethod
    def from_json(cls, obj) -> PolyPoly:
        return cls({(int(j), int(k)): Scalar.from_json(c) for j, k, c in obj["terms"]})

    def __repr__(self):
        if not self._terms:
            return "PolyPoly(0)"
        parts = [f"{c!r}*zb^{j}z^{k}" for (j, k), c in self.items()]
        return "PolyPoly(" + " + ".join(parts) + ")"


@lru_cache(maxsize=4096)
def _radial_moment(p: int) -> Scalar:
    """``int |z|^{2p} d mu_m = p! / m**(p+1)``."""
    return Scalar.m_power(-(p + 1), factorial(p))


def monomial_inner(a: int, b: int, c: int, d: int) -> Scalar:
    """``<zbar^a z^b, zbar^c z^d>`` in L^2(mu_m)."""
    if a + d != b + c:
        return Scalar(0)
    return _radial_moment(a + d)


def _by_sector(f: PolyPoly) -> dict:
    out = defaultdict(list)
    for (j, k), c in f._terms.items():
        out[k - j].append((j, k, c))
    return out


def inner(f: PolyPoly, g: PolyPoly) -> Scalar:
    """Bilinear (coefficients are real) extension of :func:`monomial_inner`."""
    if len(f) > len(g):
        f, g = g, f
    g_sec = _by_sector(g)
    total = Scalar(0)
    for (a, b), c1 in f._terms.items():
        for c, d, c2 in g_sec.get(b - a, ()):
            total = total + c1 * c2 * _radial_moment(a + d)
    return total


def norm_sq(f: PolyPoly) -> Scalar:
    return inner(f, f)


def mul_conj_symbol(f: PolyPoly, g: PolyPoly) -> PolyPoly:
    """Form ``conj(g) * f`` for an analytic symbol ``g``."""
    if not g.is_analytic():
        raise ValueError("symbol g must be an analytic polynomial (no zbar terms)")
    return g.conj() * f


def dbar(f: PolyPoly, order: int = 1) -> PolyPoly:
    """``(d/dzbar)**order``: ``zbar^j z^k -> j zbar^(j-1) z^k`` iterated."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    terms = {}
    for (j, k), c in f._terms.items():
        if j >= order:
            terms[(j - order, k)] = c * (factorial(j) // factorial(j - order))
    return PolyPoly._from_canonical(terms)


def sector_decompose(f: PolyPoly) -> dict[int, PolyPoly]:
    """Split ``f`` by sector ``d = k - j``; the parts are mutually orthogonal."""
    return {
        d: PolyPoly._from_canonical({(j, k): c for j, k, c in parts})
        for d, parts in sorted(_by_sector(f).items())
    }


@dataclass(frozen=True)
class BasisElement:
    """One orthonormal basis vector of the polyanalytic Fock space F^{N,m}.

    ``expansion`` is the basis vector multiplied by the square root of
    ``norm_sq``; that root is irrational in general, so it is never formed.
    ``expansion / sqrt(norm_sq)`` is the unit vector, and the projection onto
    it is ``<f, expansion> / norm_sq * expansion``.
    """

    kind: str
    index: tuple[int, int]
    N: int
    expansion: PolyPoly
    norm_sq: Scalar

    @property
    def sector(self) -> int:
        if self.kind == "e2":
            return -self.index[1]
        return self.index[0]


def _check_order(N):
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"order N must be a positive integer, got {N!r}")


@lru_cache(maxsize=None)
def _laguerre_expansion(alpha: int, deg: int, holomorphic: bool) -> PolyPoly:
    """``m**((alpha+1)/2) * w**alpha * L_deg^alpha(m |z|^2)`` with w = z or zbar."""
    lag = laguerre_coeffs(deg, alpha)
    terms = {}
    for l, c in enumerate(lag.coeffs):
        key = (l, l + alpha) if holomorphic else (l + alpha, l)
        terms[key] = Scalar.monomial(c, alpha + 1 + 2 * l)
    return PolyPoly._from_canonical(terms)


def basis_element(kind: str, index: tuple[int, int] | int, N: int) -> BasisElement:
    """Basis vectors of F^{N,m}.

    kind ``"e1"``, index ``(i, r)``: ``z**i L_r^i(m|z|^2)``, ``i >= 0``, ``0 <= r <= N-1``;
    kind ``"e2"``, index ``(j, k)``: ``zbar**k L_j^k(m|z|^2)``, ``1 <= k <= N-1``,
    ``0 <= j <= N-k-1``;
    kind ``"standard"``, index ``n``: ``e_n = e1(n, 0)``.
    """
    _check_order(N)
    if kind == "standard":
        n = index[0] if isinstance(index, tuple) else index
        if n < 0:
            raise ValueError(f"standard basis index must be >= 0, got {n}")
        kind, index = "e1", (n, 0)
        out_kind = "standard"
    else:
        out_kind = kind
    a, b = index
    if kind == "e1":
        i, r = a, b
        if i < 0 or not 0 <= r <= N - 1:
            raise ValueError(f"e1({i}, {r}) needs i >= 0 and 0 <= r <= {N - 1}")
        expansion = _laguerre_expansion(i, r, True)
        nsq = Fraction(factorial(r + i), factorial(r))
    elif kind == "e2":
        j, k = a, b
        if not 1 <= k <= N - 1 or not 0 <= j <= N - k - 1:
            raise ValueError(f"e2({j}, {k}) out of range for N={N}")
        expansion = _laguerre_expansion(k, j, False)
        nsq = Fraction(factorial(j + k), factorial(j))
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    if out_kind == "standard":
        return BasisElement("standard", (a, b), N, expansion, Scalar(nsq))
    return BasisElement(kind, (a, b), N, expansion, Scalar(nsq))


@lru_cache(maxsize=None)
def sector_basis_F(d: int, N: int) -> tuple[BasisElement, ...]:
    """The basis vectors of F^{N,m} living in sector ``d`` (at most N of them)."""
    _check_order(N)
    if d >= 0:
        return tuple(basis_element("e1", (d, r), N) for r in range(N))
    k = -d
    if k > N - 1:
        return ()
    return tuple(basis_element("e2", (j, k), N) for j in range(N - k))


def _random_rational(rng: random.Random, bound: int = 10) -> Fraction:
    q = rng.randint(1, bound)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def random_analytic(rng: random.Random, degree: int, bound: int = 10, exact_degree=False) -> PolyPoly:
    """Analytic polynomial of degree <= ``degree`` with rational coefficients in [-bound, bound]."""
    coeffs = [_random_rational(rng, bound) for _ in range(degree + 1)]
    if exact_degree and degree >= 0:
        while not coeffs[-1]:
            coeffs[-1] = _random_rational(rng, bound)
    return PolyPoly.analytic(coeffs)


def random_polypoly(rng: random.Random, max_index: int, n_terms: int, bound: int = 10) -> PolyPoly:
    """Random polyanalytic polynomial with rational (m-free) coefficients."""
    terms = {}
    for _ in range(n_terms):
        key = (rng.randint(0, max_index), rng.randint(0, max_index))
        terms[key] = _random_rational(rng, bound)
    return PolyPoly(terms)
