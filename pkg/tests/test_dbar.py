import random

from fockhankel.dbar import random_kernel_element, solve_min_norm, verify_minimality
from fockhankel.polyanalytic import PolyPoly, dbar, inner, norm_sq, random_analytic, sector_basis_F
from fockhankel.projection import project_F_generic
from fockhankel.scalar import Scalar


def test_zero_rhs():
    rep = solve_min_norm(PolyPoly(), 3)
    assert rep.u == PolyPoly()
    assert rep.residual_ok and rep.orthogonal_ok


def test_constant_rhs():
    rep = solve_min_norm(PolyPoly.analytic([1]), 1)
    assert rep.u == PolyPoly.monomial(1, 0)
    assert rep.norm_sq == Scalar.m_power(-2)


def test_linear_rhs():
    rep = solve_min_norm(PolyPoly.analytic([0, 1]), 1)
    assert rep.u == PolyPoly.monomial(1, 1) - PolyPoly.monomial(0, 0, Scalar.m_power(-1))
    assert rep.norm_sq.exact_at(1) == 1


def test_right_inverse_and_orthogonality(rng):
    for N in range(1, 5):
        for deg in range(11):
            f = random_analytic(rng, deg)
            rep = solve_min_norm(f, N)
            assert dbar(rep.u, N) == f
            assert rep.residual_ok and rep.orthogonal_ok
            for d in rep.u.sectors():
                for e in sector_basis_F(d, N):
                    assert inner(rep.u, e.expansion) == 0


def test_norm_identity(rng):
    from math import factorial

    for N in range(1, 5):
        f = random_analytic(rng, 6)
        w = PolyPoly.monomial(N, 0, Scalar(1) / factorial(N)) * f
        rep = solve_min_norm(f, N)
        assert rep.norm_sq == norm_sq(w) - norm_sq(project_F_generic(w, N))


def test_minimality():
    rep = solve_min_norm(PolyPoly.analytic([0, 0, 1]), 2)
    assert verify_minimality(rep, 2, trials=100, seed=3)


def test_kernel_elements_nonzero_and_in_kernel():
    rng = random.Random(5)
    for N in range(1, 5):
        for _ in range(20):
            h = random_kernel_element(N, rng)
            assert h and dbar(h, N) == PolyPoly()


def test_minimality_detects_bad_solution():
    from fockhankel.polyanalytic import basis_element

    N = 2
    rep = solve_min_norm(PolyPoly.analytic([1, 2]), N)
    # a large kernel component: some random direction must shorten it
    extra = PolyPoly()
    for i in range(11):
        for r in range(N):
            extra = extra + basis_element("e1", (i, r), N).expansion.scale(20)
    u = rep.u + extra
    bad = type(rep)(u, True, False, norm_sq(u))
    assert not verify_minimality(bad, N, trials=200, seed=1)
