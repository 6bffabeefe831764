"""Minimal-norm solutions of ``(d/dzbar)**N u = f`` in L^2(mu_m).

``zbar**N / N! * f`` is one solution; removing its component in the kernel
F^{N,m} of ``(d/dzbar)**N`` gives the solution of least norm.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

from .polyanalytic import (
    PolyPoly,
    _check_order,
    _random_rational,
    basis_element,
    dbar,
    inner,
    sector_basis_F,
    sector_decompose,
)
from .projection import project_F_generic
from .scalar import Scalar

__all__ = ["SolutionReport", "solve_min_norm", "verify_minimality", "random_kernel_element"]


@dataclass(frozen=True)
class SolutionReport:
    u: PolyPoly
    residual_ok: bool
    orthogonal_ok: bool
    norm_sq: Scalar

    def to_json(self) -> dict:
        return {
            "u": self.u.to_json(),
            "residual_ok": self.residual_ok,
            "orthogonal_ok": self.orthogonal_ok,
            "norm_sq": self.norm_sq.to_json(),
        }


def _orthogonal_to_kernel(u: PolyPoly, N: int) -> bool:
    # only basis vectors sharing a sector with u can pair with it
    for d, part in sector_decompose(u).items():
        for e in sector_basis_F(d, N):
            if inner(part, e.expansion):
                return False
    return True


def solve_min_norm(f: PolyPoly, N: int) -> SolutionReport:
    _check_order(N)
    if not f.is_analytic():
        raise ValueError("right-hand side must be an analytic polynomial")
    w = PolyPoly.monomial(N, 0, Scalar(1) / factorial(N)) * f
    u = w - project_F_generic(w, N)
    return SolutionReport(
        u=u,
        residual_ok=dbar(u, N) == f,
        orthogonal_ok=_orthogonal_to_kernel(u, N),
        norm_sq=inner(u, u),
    )


def random_kernel_element(N: int, rng: random.Random, max_index: int = 10, n_terms: int = 3) -> PolyPoly:
    """Nonzero rational combination of basis vectors of F^{N,m}."""
    _check_order(N)
    h = PolyPoly()
    while not h:
        for _ in range(n_terms):
            if N > 1 and rng.random() < 0.3:
                k = rng.randint(1, N - 1)
                e = basis_element("e2", (rng.randint(0, N - k - 1), k), N)
            else:
                e = basis_element("e1", (rng.randint(0, max_index), rng.randint(0, N - 1)), N)
            h = h + e.expansion.scale(_random_rational(rng))
    return h


def verify_minimality(report: SolutionReport, N: int, trials: int = 100, seed: int = 0, m=1) -> bool:
    """Check ``||u + h||^2 > ||u||^2`` exactly at ``m`` for random kernel elements ``h``."""
    rng = random.Random(seed)
    base = report.norm_sq.exact_at(m)
    for _ in range(trials):
        h = random_kernel_element(N, rng)
        v = report.u + h
        if not inner(v, v).exact_at(m) > base:
            return False
    return True
