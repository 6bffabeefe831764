"""Hankel operators on the Fock space with conjugate-analytic polynomial symbols.

Four families act on an analytic polynomial ``f`` through ``conj(g) * f``:

* big:    ``(I - P) (conj(g) f)``, ``P`` the Fock projection
* small:  ``Q (conj(g) f)``, ``Q`` onto ``{conj(h) : h(0) = 0}``
* middle: ``(I - P_S) (conj(g) f)`` with ``S = S^{N,m}``
* tilde:  ``(I - P_F) (conj(g) f)`` with ``F = F^{N,m}``, the polyanalytic Fock space

For monomial symbols ``z**s`` the tilde operator is diagonal on the standard
basis ``e_n`` and its squared column norms have the closed form::

    (s!/m^s) * (binom(n+s, s) - sum_{r<N} binom(n, s-r) binom(s, r))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .laguerre import binom, identity_vandermonde
from .polyanalytic import PolyPoly, _check_order, inner, mul_conj_symbol
from .projection import project_conjF0, project_F_generic, project_S
from .scalar import Scalar

__all__ = [
    "NormSequence",
    "Classification",
    "InconsistencyError",
    "ZERO_SEQUENCE",
    "apply_tilde",
    "apply_middle_Y",
    "apply_small",
    "apply_big",
    "norm_sq_closed",
    "norm_sq_gram",
    "norm_sq_sequence",
    "cross_orthogonality",
    "growth_degree",
    "classify",
]

#: growth_degree of an identically zero norm sequence
ZERO_SEQUENCE = -1


class InconsistencyError(AssertionError):
    """Two independent computation paths disagreed."""


def _symbol(g) -> PolyPoly:
    if isinstance(g, PolyPoly):
        return g
    return PolyPoly.analytic(g)


def apply_tilde(g, N: int, f: PolyPoly) -> PolyPoly:
    _check_order(N)
    w = mul_conj_symbol(f, _symbol(g))
    return w - project_F_generic(w, N)


def apply_middle_Y(g, N: int, f: PolyPoly) -> PolyPoly:
    _check_order(N)
    w = mul_conj_symbol(f, _symbol(g))
    return w - project_S(w, N)


def apply_small(g, f: PolyPoly) -> PolyPoly:
    return project_conjF0(mul_conj_symbol(f, _symbol(g)))


def apply_big(g, f: PolyPoly) -> PolyPoly:
    return apply_tilde(g, 1, f)


def norm_sq_closed(s: int, N: int, n: int) -> Scalar:
    """``||H~_{zbar^s} e_n||^2`` from the binomial closed form."""
    _check_order(N)
    bracket = binom(n + s, s) - sum(binom(n, s - r) * binom(s, r) for r in range(N))
    return Scalar.m_power(-s, factorial(s) * bracket)


@lru_cache(maxsize=None)
def _tilde_image(s: int, N: int, n: int) -> PolyPoly:
    return apply_tilde(PolyPoly.monomial(0, s), N, PolyPoly.monomial(0, n))


def norm_sq_gram(s: int, N: int, n: int) -> Scalar:
    """``||H~_{zbar^s} e_n||^2`` by projecting and integrating.

    ``e_n = m^((n+1)/2) z^n / sqrt(n!)``, so the squared norm of the image of
    ``z^n`` is rescaled by ``m^(n+1) / n!``.
    """
    img = _tilde_image(s, N, n)
    return inner(img, img) * Scalar.m_power(n + 1) / factorial(n)


@dataclass(frozen=True)
class NormSequence:
    """``n -> ||H~^N_{zbar^s} e_n||^2`` for ``n = 0..n_max``."""

    s: int
    N: int
    values: tuple[Scalar, ...]
    closed_form_used: bool = True
    gram_checked: bool = True

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def evaluate(self, m) -> list[float]:
        return [v.evaluate(m) for v in self.values]

    def tail(self, start: int | None = None) -> tuple[Scalar, ...]:
        """Values for ``n >= start`` (default ``s``), where the sequence is polynomial in n."""
        return self.values[self.s if start is None else start:]

    def observed_sup(self, m=1):
        """Largest value over the computed range, exact at rational ``m``."""
        return max(v.exact_at(m) for v in self.values)


def norm_sq_sequence(s: int, N: int, n_max: int, check: bool = True) -> NormSequence:
    """Closed-form values, each cross-checked against :func:`norm_sq_gram`."""
    _check_order(N)
    if s < 0 or n_max < 0:
        raise ValueError("s and n_max must be nonnegative")
    values = []
    for n in range(n_max + 1):
        v = norm_sq_closed(s, N, n)
        if check:
            g = norm_sq_gram(s, N, n)
            if g != v:
                raise InconsistencyError(f"s={s}, N={N}, n={n}: closed {v!r} != gram {g!r}")
        values.append(v)
    return NormSequence(s, N, tuple(values), closed_form_used=True, gram_checked=check)


def cross_orthogonality(s: int, N: int, p: int, n: int) -> Scalar:
    """``<H~ z^p, H~ z^n> * m^((p+n+2)/2)``, i.e. ``sqrt(p! n!) <H~ e_p, H~ e_n>``.

    The omitted factor ``1/sqrt(p! n!)`` is positive and usually irrational,
    so the returned Scalar vanishes exactly when the basis inner product does.
    """
    if p == n:
        raise ValueError("cross_orthogonality needs p != n")
    a, b = _tilde_image(s, N, p), _tilde_image(s, N, n)
    return inner(a, b) * Scalar.monomial(1, p + n + 2)


def growth_degree(seq: NormSequence, m=1) -> int:
    """Exact polynomial degree of the tail ``n >= s`` of a norm sequence.

    Repeated finite differences at rational ``m``. Returns ``ZERO_SEQUENCE``
    for an identically zero sequence. Raises ValueError when the tail is too
    short to certify the degree, i.e. when ``n_max < s + (s - N) + 2``.
    """
    need = max(seq.s - seq.N, 0) + 3
    tail = [v.exact_at(m) for v in seq.tail()]
    if len(tail) < need:
        raise ValueError(
            f"need n_max >= {seq.s + need - 1} to certify growth, got {seq.n_max}"
        )
    if all(v == 0 for v in seq.values):
        return ZERO_SEQUENCE
    diffs = tail
    degree = 0
    while True:
        nxt = [b - a for a, b in zip(diffs, diffs[1:])]
        if len(nxt) < 2:
            raise ValueError("tail too short to certify the growth degree")
        if all(v == 0 for v in nxt):
            return degree
        diffs = nxt
        degree += 1


@dataclass(frozen=True)
class Classification:
    """Boundedness/compactness verdict for a polynomial symbol.

    ``verdict`` is one of ``zero``, ``finite_rank`` (middle operator only),
    ``bounded_noncompact`` or ``unbounded``.
    """

    operator_kind: str
    symbol_degree: int
    N: int
    verdict: str
    bounded: bool
    compact: bool
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "operator_kind": self.operator_kind,
            "symbol_degree": self.symbol_degree,
            "N": self.N,
            "verdict": self.verdict,
            "bounded": self.bounded,
            "compact": self.compact,
            "evidence": self.evidence,
        }


def classify(g, N: int, kind: str = "tilde") -> Classification:
    """Classify ``H~^N_{conj g}`` (``kind="tilde"``) or the middle operator
    ``H^{Y_N}_{conj g}`` (``kind="middleY"``) for an analytic polynomial ``g``.

    The verdict follows the degree rule (bounded iff ``deg g <= N``, compact
    iff ``deg g < N``). The evidence records the growth degree of the norm
    sequence of the leading monomial ``z^deg``.
    """
    _check_order(N)
    if kind not in ("tilde", "middleY"):
        raise ValueError(f"kind must be 'tilde' or 'middleY', got {kind!r}")
    g = _symbol(g)
    if not g.is_analytic():
        raise ValueError("symbol must be an analytic polynomial")
    deg = g.degree()

    evidence: dict = {"leading_monomial_degree": deg}
    if deg >= 0:
        seq = norm_sq_sequence(deg, N, deg + max(deg - N, 0) + 4)
        gd = growth_degree(seq)
        evidence["growth_degree"] = gd
        evidence["n_max"] = seq.n_max
        if deg == N:
            evidence["vandermonde_collapse"] = all(
                identity_vandermonde(n, deg) for n in range(seq.n_max + 1)
            )
    else:
        evidence["growth_degree"] = ZERO_SEQUENCE

    if deg > N:
        verdict, bounded, compact = "unbounded", False, False
    elif deg == N:
        verdict, bounded, compact = "bounded_noncompact", True, False
    elif kind == "tilde" or deg <= 0:
        # conj(g) f stays in F^{N,m} (tilde) or g is constant (middle)
        verdict, bounded, compact = "zero", True, True
    else:
        verdict, bounded, compact = "finite_rank", True, True
    return Classification(kind, deg, N, verdict, bounded, compact, evidence)
