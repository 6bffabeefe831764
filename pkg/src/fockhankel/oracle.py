"""Floating-point cross-checks by Gauss-Laguerre quadrature.

Angular integrals are done analytically: after ``z = r e^{i theta}`` only
equal-sector terms survive, and with ``y = m r^2`` each surviving integral is

    (1/m) int_0^inf (y/m)^q p(y/m) q(y/m) e^{-y} dy

for radial polynomials ``p``, ``q``. That radial integral is what the rule
evaluates.

Rules come in double precision by default. Moments such as
``int y^19 L_10^10(y) e^{-y} dy = 0`` cancel integrand values near 1e22, so
:func:`quad_moment` escalates to an mpmath rule of sufficient precision when
the double-precision conditioning estimate cannot meet the tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import math

import mpmath
import numpy as np
from scipy.linalg import eigh_tridiagonal

from .laguerre import laguerre_eval
from .polyanalytic import PolyPoly, _by_sector
from .scalar import as_positive_rational

__all__ = ["QuadRule", "gauss_laguerre", "rule_for_degree", "quad_moment", "quad_inner"]

MAX_NODES = 64


@dataclass(frozen=True)
class QuadRule:
    """Gauss-Laguerre rule; ``dps`` is None for double precision, otherwise the
    mpmath working precision in decimal digits (nodes are then mpf tuples)."""

    node_count: int
    nodes: np.ndarray | tuple
    weights: np.ndarray | tuple
    dps: int | None = None

    @property
    def exact_degree(self) -> int:
        return 2 * self.node_count - 1

    def integrate(self, values) -> float:
        if self.dps is None:
            return float(np.dot(self.weights, values))
        with mpmath.workdps(self.dps):
            return mpmath.fsum(w * v for w, v in zip(self.weights, values))


@lru_cache(maxsize=None)
def gauss_laguerre(node_count: int, dps: int | None = None) -> QuadRule:
    """Nodes and weights for ``int_0^inf f(y) e^{-y} dy`` (Golub-Welsch).

    The Jacobi matrix of the ``L_k^0`` recurrence has diagonal ``2k+1`` and
    off-diagonal ``k``; its eigenvalues are the nodes and the squared first
    eigenvector components are the weights.
    """
    if not 1 <= node_count <= MAX_NODES:
        raise ValueError(f"node_count must be in [1, {MAX_NODES}], got {node_count}")
    if dps is None:
        k = np.arange(node_count, dtype=float)
        nodes, vecs = eigh_tridiagonal(2 * k + 1, k[1:])
        weights = vecs[0, :] ** 2
        nodes.setflags(write=False)
        weights.setflags(write=False)
        return QuadRule(node_count, nodes, weights)
    with mpmath.workdps(dps):
        jac = mpmath.matrix(node_count, node_count)
        for k in range(node_count):
            jac[k, k] = 2 * k + 1
            if k:
                jac[k, k - 1] = jac[k - 1, k] = k
        evals, vecs = mpmath.eigsy(jac)
        pairs = sorted((evals[i], vecs[0, i] ** 2) for i in range(node_count))
    return QuadRule(node_count, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), dps)


def rule_for_degree(degree: int, guard: int = 2, dps: int | None = None) -> QuadRule:
    """Smallest rule exact for polynomials of ``degree``, plus guard nodes."""
    return gauss_laguerre(min(MAX_NODES, (degree + 2) // 2 + guard), dps)


def _require(rule: QuadRule, degree: int):
    if degree > rule.exact_degree:
        raise ValueError(
            f"{rule.node_count}-node rule is exact to degree {rule.exact_degree}, need {degree}"
        )


def _mp_laguerre(k: int, alpha: int, x):
    prev, cur = mpmath.mpf(1), alpha + 1 - x
    if k == 0:
        return prev
    for j in range(1, k):
        prev, cur = cur, ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1)
    return cur


def _moment_terms(a, b, c, rule):
    if rule.dps is None:
        y = rule.nodes
        return y**a * laguerre_eval(b, c, y)
    with mpmath.workdps(rule.dps):
        return [y**a * _mp_laguerre(b, c, y) for y in rule.nodes]


def quad_moment(a: int, b: int, c: int, rule: QuadRule | None = None, rtol: float = 1e-12) -> float:
    """``int_0^inf y^a L_b^c(y) e^{-y} dy`` by quadrature.

    With an explicit ``rule`` the result is whatever that rule gives. Without
    one, a double-precision rule is tried first and replaced by an mpmath
    rule when ``eps * sum |w_i f(y_i)|`` exceeds ``rtol * max(1, |result|)``.
    """
    if rule is not None:
        _require(rule, a + b)
        return float(rule.integrate(_moment_terms(a, b, c, rule)))
    rule = rule_for_degree(a + b)
    terms = _moment_terms(a, b, c, rule)
    value = rule.integrate(terms)
    spread = float(np.dot(rule.weights, np.abs(terms)))
    if spread * np.finfo(float).eps * rule.node_count <= rtol * max(1.0, abs(value)):
        return value
    dps = int(math.log10(spread / rtol)) + 20
    mp_rule = rule_for_degree(a + b, dps=dps)
    return float(mp_rule.integrate(_moment_terms(a, b, c, mp_rule)))


def _radial_parts(f: PolyPoly, m: float) -> dict:
    """sector -> (|sector|, coefficients of the radial polynomial in |z|^2)."""
    out = {}
    for d, parts in _by_sector(f).items():
        coeffs = {}
        for j, k, c in parts:
            l = min(j, k)
            coeffs[l] = coeffs.get(l, 0.0) + c.evaluate(m)
        deg = max(coeffs)
        out[d] = np.array([coeffs.get(l, 0.0) for l in range(deg + 1)])
    return out


def quad_inner(f: PolyPoly, g: PolyPoly, m, rule: QuadRule | None = None) -> float:
    """Float approximation of ``<f, g>`` in L^2(mu_m) at a concrete ``m``."""
    if isinstance(m, float):
        if not m > 0:
            raise ValueError("m must be positive")
        mf = m
    else:
        mf = float(as_positive_rational(m))
    pf, pg = _radial_parts(f, mf), _radial_parts(g, mf)
    common = sorted(set(pf) & set(pg))
    if not common:
        return 0.0
    need = max(abs(d) + len(pf[d]) - 1 + len(pg[d]) - 1 for d in common)
    if rule is None:
        rule = rule_for_degree(need)
    _require(rule, need)
    x = rule.nodes / mf
    total = 0.0
    for d in common:
        # np.polyval wants highest degree first
        vals = x ** abs(d) * np.polyval(pf[d][::-1], x) * np.polyval(pg[d][::-1], x)
        total += rule.integrate(vals)
    return total / mf
