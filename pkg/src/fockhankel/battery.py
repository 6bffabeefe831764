"""Invariant battery behind ``fockhankel verify``.

Each check returns a :class:`CheckResult` with pass/fail counts. Library
functions are looked up through their modules at call time so a test can
swap one out and watch the battery fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import hankel, laguerre, oracle, polyanalytic, projection

__all__ = ["CheckResult", "run_battery"]


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, case=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.examples) < 5:
                self.examples.append(repr(case))

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failed": self.failed, "examples": self.examples}


def check_identities(bound: int) -> CheckResult:
    res = CheckResult("identities")
    for r in range(bound + 1):
        for n in range(bound + 1):
            for s in range(bound + 1):
                res.record(laguerre.identity_gould(r, n, s), ("gould", r, n, s))
    for n in range(bound + 1):
        for s in range(bound + 1):
            res.record(laguerre.identity_vandermonde(n, s), ("vandermonde", n, s))
    for n in range(bound + 1):
        for s in range(n + 1):
            for r in range(min(bound, 10) + 1):
                ok = laguerre.moment_I(n, r, n - s) == laguerre.moment_I_closed(n, r, s)
                res.record(ok, ("moment", n, r, s))
    return res


def check_projection(bound: int, max_N: int) -> CheckResult:
    res = CheckResult("projection_two_path")
    for N in range(1, max_N + 1):
        for s in range(bound + 1):
            for n in range(bound + 1):
                a = projection.project_monomial_F(s, n, N)
                b = projection.project_F_generic(polyanalytic.PolyPoly.monomial(s, n), N)
                res.record(a == b, (s, n, N))
    return res


def _basis(N: int, max_index: int):
    els = [polyanalytic.basis_element("e1", (i, r), N) for i in range(max_index + 1) for r in range(N)]
    els += [
        polyanalytic.basis_element("e2", (j, k), N) for k in range(1, N) for j in range(N - k)
    ]
    return els


def check_orthonormality(bound: int, max_N: int) -> CheckResult:
    res = CheckResult("orthonormality")
    for N in range(1, max_N + 1):
        els = _basis(N, min(bound, 8))
        for x in els:
            for y in els:
                want = x.norm_sq if x is y else 0
                res.record(polyanalytic.inner(x.expansion, y.expansion) == want, (N, x.index, y.index))
    return res


def check_norms(bound: int, max_N: int) -> CheckResult:
    res = CheckResult("norm_two_path")
    for s in range(min(bound, 6) + 1):
        for N in range(1, max_N + 1):
            for n in range(bound + 1):
                ok = hankel.norm_sq_closed(s, N, n) == hankel.norm_sq_gram(s, N, n)
                res.record(ok, (s, N, n))
    return res


def check_norm_chain(max_N: int, seed: int, pairs: int = 20) -> CheckResult:
    res = CheckResult("norm_chain")
    rng = random.Random(seed)
    for _ in range(pairs):
        g = polyanalytic.random_analytic(rng, rng.randint(0, 5))
        f = polyanalytic.random_analytic(rng, rng.randint(0, 5))
        small = polyanalytic.norm_sq(hankel.apply_small(g, f)).exact_at(1)
        big = polyanalytic.norm_sq(hankel.apply_big(g, f)).exact_at(1)
        prev = None
        for N in range(1, max_N + 1):
            mid = polyanalytic.norm_sq(hankel.apply_middle_Y(g, N, f)).exact_at(1)
            ok = small <= mid <= big and (prev is None or mid <= prev)
            res.record(ok, (g, f, N))
            prev = mid
    return res


def check_oracle(bound: int, max_N: int, m) -> CheckResult:
    res = CheckResult("oracle_agreement")
    for a in range(bound + 1):
        for b in range(min(bound, 10) + 1):
            for c in range(min(bound, 10) + 1):
                exact = laguerre.moment_I(a, b, c)
                q = oracle.quad_moment(a, b, c)
                res.record(abs(q - float(exact)) <= 1e-10 * max(1.0, abs(float(exact))), ("moment", a, b, c))
    for N in range(1, max_N + 1):
        els = _basis(N, min(bound, 8))
        for x in els:
            for y in els:
                scale = (x.norm_sq.evaluate(m) * y.norm_sq.evaluate(m)) ** 0.5
                q = oracle.quad_inner(x.expansion, y.expansion, m) / scale
                if x is y:
                    ok = abs(q - 1.0) <= 1e-10
                else:
                    ok = abs(q) <= 1e-12
                res.record(ok, ("inner", N, x.index, y.index))
    return res


def run_battery(bound: int = 12, max_N: int = 4, seed: int = 0, m=Fraction(1)) -> list[CheckResult]:
    return [
        check_identities(bound),
        check_projection(bound, max_N),
        check_orthonormality(bound, max_N),
        check_norms(bound, max_N),
        check_norm_chain(max_N, seed),
        check_oracle(bound, max_N, m),
    ]
