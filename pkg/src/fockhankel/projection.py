"""Orthogonal projections of polyanalytic polynomials.

Targets: the polyanalytic Fock space F^{N,m} (closed monomial formula and a
basis-expansion path), the space S^{N,m} spanned by ``zbar^j z^k`` with
``j <= N-1, k >= j``, the antianalytic space ``{conj(f) : f(0) = 0}`` and the
finite-dimensional corrector span ``{zbar^j z^k : 0 <= k < j <= N-1}``.

Every target splits along sectors ``d = k - j`` into pieces of dimension at
most N, so no projection here truncates anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .laguerre import laguerre_coeffs, moment_I
from .polyanalytic import (
    PolyPoly,
    _check_order,
    inner,
    monomial_inner,
    sector_basis_F,
    sector_decompose,
)
from .scalar import Scalar

__all__ = [
    "SectorBasis",
    "project_monomial_F",
    "project_F_generic",
    "gram_schmidt",
    "build_sector_basis_S",
    "corrector_sector_basis",
    "project_S",
    "project_conjF0",
    "project_corrector",
    "gram_rank",
]


def project_monomial_F(s: int, n: int, N: int) -> PolyPoly:
    """Projection of ``zbar**s z**n`` onto F^{N,m} by the closed formula.

    For ``n >= s`` (sector ``d = n - s``)::

        sum_{r<N} r!/(r+d)! m^{-s} I_{n,r,d} L_r^d(m|z|^2) z^d

    for ``s > n >= s - N + 1`` (sector ``-q``, ``q = s - n``)::

        sum_{j<N-q} j!/(j+q)! m^{-n} I_{s,j,q} L_j^q(m|z|^2) zbar^q

    and zero otherwise.
    """
    _check_order(N)
    if s < 0 or n < 0:
        raise ValueError("exponents must be nonnegative")
    if n >= s:
        d, top, base, lead = n - s, N, n, s
        holomorphic = True
    elif n >= s - N + 1:
        d, top, base, lead = s - n, N + n - s, s, n
        holomorphic = False
    else:
        return PolyPoly()

    acc: dict = {}
    for r in range(top):
        weight = Fraction(factorial(r), factorial(r + d)) * moment_I(base, r, d)
        if not weight:
            continue
        # m**(-lead) times L_r^d(m|z|^2): the |z|^{2l} term carries m**l
        for l, c in enumerate(laguerre_coeffs(r, d).coeffs):
            key = (l, l + d) if holomorphic else (l + d, l)
            acc[key] = acc.get(key, Scalar(0)) + Scalar.m_power(l - lead, weight * c)
    return PolyPoly(acc)


def _project_onto(f: PolyPoly, vectors, norms) -> PolyPoly:
    out = PolyPoly()
    for v, nsq in zip(vectors, norms):
        c = inner(f, v)
        if c:
            out = out + v.scale(c / nsq)
    return out


def project_F_generic(f: PolyPoly, N: int) -> PolyPoly:
    """Projection onto F^{N,m} as ``sum <f, e> e`` over the Laguerre basis.

    A sector-``d`` piece of ``f`` meets only the basis vectors of that
    sector, so the sum is finite.
    """
    _check_order(N)
    out = PolyPoly()
    for d, part in sector_decompose(f).items():
        basis = sector_basis_F(d, N)
        out = out + _project_onto(part, [e.expansion for e in basis], [e.norm_sq for e in basis])
    return out


def gram_schmidt(vectors) -> tuple[list[PolyPoly], list[Scalar]]:
    """Classical Gram-Schmidt without normalization, in the given order.

    Returns the orthogonal vectors and their squared norms. Dependent inputs
    are dropped.
    """
    basis: list[PolyPoly] = []
    norms: list[Scalar] = []
    for v in vectors:
        w = v
        for b, nsq in zip(basis, norms):
            c = inner(v, b)
            if c:
                w = w - b.scale(c / nsq)
        if w:
            basis.append(w)
            norms.append(inner(w, w))
    return basis, norms


@dataclass(frozen=True)
class SectorBasis:
    """Orthogonal (unnormalized) basis of one sector of a projection target."""

    N: int
    d: int
    vectors: tuple[PolyPoly, ...]
    norm_sqs: tuple[Scalar, ...]
    monomials: tuple[tuple[int, int], ...]

    def project(self, f: PolyPoly) -> PolyPoly:
        return _project_onto(f, self.vectors, self.norm_sqs)


@lru_cache(maxsize=None)
def build_sector_basis_S(N: int, d: int) -> SectorBasis:
    """Orthogonalize ``zbar^j z^(j+d)``, ``j = 0..N-1``, in increasing ``j``."""
    _check_order(N)
    if d < 0:
        raise ValueError(f"S^(N,m) has no negative sectors, got d={d}")
    monos = tuple((j, j + d) for j in range(N))
    vecs, norms = gram_schmidt([PolyPoly.monomial(j, k) for j, k in monos])
    return SectorBasis(N, d, tuple(vecs), tuple(norms), monos)


@lru_cache(maxsize=None)
def corrector_sector_basis(N: int, d: int) -> SectorBasis:
    """Orthogonalize ``zbar^j z^(j+d)`` for ``-d <= j <= N-1`` (sector ``d < 0``)."""
    _check_order(N)
    if d >= 0:
        raise ValueError(f"corrector span lives in sectors d < 0, got d={d}")
    monos = tuple((j, j + d) for j in range(-d, N))
    vecs, norms = gram_schmidt([PolyPoly.monomial(j, k) for j, k in monos])
    return SectorBasis(N, d, tuple(vecs), tuple(norms), monos)


def project_S(f: PolyPoly, N: int) -> PolyPoly:
    """Projection onto S^{N,m}; negative sectors map to zero."""
    _check_order(N)
    out = PolyPoly()
    for d, part in sector_decompose(f).items():
        if d >= 0:
            out = out + build_sector_basis_S(N, d).project(part)
    return out


def project_conjF0(f: PolyPoly) -> PolyPoly:
    """Projection onto the closed span of ``zbar**k``, ``k >= 1``."""
    out = PolyPoly()
    for d, part in sector_decompose(f).items():
        if d < 0:
            k = -d
            c = inner(part, PolyPoly.monomial(k, 0))
            if c:
                out = out + PolyPoly.monomial(k, 0, c / monomial_inner(k, 0, k, 0))
    return out


def project_corrector(f: PolyPoly, N: int) -> PolyPoly:
    """Projection onto ``span{zbar^j z^k : 0 <= k < j <= N-1}``, of dimension N(N-1)/2."""
    _check_order(N)
    out = PolyPoly()
    for d, part in sector_decompose(f).items():
        if -(N - 1) <= d < 0:
            out = out + corrector_sector_basis(N, d).project(part)
    return out


def gram_rank(vectors, m=1) -> int:
    """Exact rank of the Gram matrix ``[<v_i, v_j>]`` evaluated at rational ``m``."""
    m = Fraction(m)
    # coefficients and radial moments as plain rationals at this m, grouped by sector
    evaluated = []
    for v in vectors:
        by_sector: dict = {}
        for (j, k), c in v.items():
            by_sector.setdefault(k - j, []).append((j, k, c.exact_at(m)))
        evaluated.append(by_sector)

    @lru_cache(maxsize=None)
    def moment(p):
        return Fraction(factorial(p)) / m ** (p + 1)

    def pair(x, y):
        total = Fraction(0)
        for d, terms in x.items():
            other = y.get(d)
            if other:
                for a, _, c1 in terms:
                    for _, dd, c2 in other:
                        total += c1 * c2 * moment(a + dd)
        return total

    size = len(evaluated)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = pair(evaluated[i], evaluated[j])
    return _rank(rows)


def _rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] / p[col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], p)]
        rank += 1
    return rank
