from fractions import Fraction

import pytest

from fockhankel.laguerre import laguerre_coeffs
from fockhankel.polyanalytic import PolyPoly, dbar, inner, norm_sq, random_polypoly
from fockhankel.projection import (
    build_sector_basis_S,
    corrector_sector_basis,
    gram_rank,
    gram_schmidt,
    project_conjF0,
    project_corrector,
    project_F_generic,
    project_monomial_F,
    project_S,
)
from fockhankel.scalar import Scalar

PROJECTIONS = {
    "F1": lambda f: project_F_generic(f, 1),
    "F3": lambda f: project_F_generic(f, 3),
    "S2": lambda f: project_S(f, 2),
    "S4": lambda f: project_S(f, 4),
    "Q": project_conjF0,
    "C3": lambda f: project_corrector(f, 3),
    "C5": lambda f: project_corrector(f, 5),
}


def test_closed_form_examples():
    assert project_monomial_F(1, 1, 2) == PolyPoly.monomial(1, 1)
    # z-bar z onto the Fock space: <zbar z, 1>/||1||^2 = 1/m
    assert project_monomial_F(1, 1, 1) == PolyPoly.monomial(0, 0, Scalar.m_power(-1))
    assert project_monomial_F(5, 1, 3) == PolyPoly()


def test_two_paths_agree():
    for N in range(1, 6):
        for s in range(13):
            for n in range(13):
                assert project_monomial_F(s, n, N) == project_F_generic(PolyPoly.monomial(s, n), N), (s, n, N)


def test_generic_fixes_subspace(rng):
    for N in range(1, 5):
        for _ in range(5):
            terms = {(rng.randint(0, N - 1), rng.randint(0, 8)): Fraction(rng.randint(1, 9)) for _ in range(4)}
            f = PolyPoly(terms)
            assert project_F_generic(f, N) == f
    assert project_F_generic(PolyPoly(), 2) == PolyPoly()


def test_sector_basis_S_examples():
    b = build_sector_basis_S(1, 4)
    assert b.vectors == (PolyPoly.monomial(0, 4),)
    b = build_sector_basis_S(2, 0)
    assert b.vectors == (PolyPoly.monomial(0, 0), PolyPoly.monomial(1, 1) - PolyPoly.monomial(0, 0, Scalar.m_power(-1)))
    with pytest.raises(ValueError):
        build_sector_basis_S(2, -1)


@pytest.mark.parametrize("N", [1, 2, 3, 5])
@pytest.mark.parametrize("d", [0, 1, 4])
def test_sector_basis_S_orthogonal_and_spanning(N, d):
    b = build_sector_basis_S(N, d)
    for i, v in enumerate(b.vectors):
        assert inner(v, v) == b.norm_sqs[i]
        for w in b.vectors[i + 1:]:
            assert inner(v, w) == 0
    for j, k in b.monomials:
        mono = PolyPoly.monomial(j, k)
        assert b.project(mono) == mono


@pytest.mark.parametrize("N", [1, 2, 4])
@pytest.mark.parametrize("d", [0, 2])
def test_gram_schmidt_reproduces_laguerre(N, d):
    # unnormalized Gram-Schmidt in increasing j gives (-1)^r r!/m^r z^d L_r^d(m|z|^2)
    b = build_sector_basis_S(N, d)
    for r, v in enumerate(b.vectors):
        lag = laguerre_coeffs(r, d)
        expected = PolyPoly(
            {(l, l + d): Scalar.m_power(l - r, (-1) ** r * Fraction(_fact(r)) * c) for l, c in enumerate(lag.coeffs)}
        )
        assert v == expected


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_gram_schmidt_drops_dependent():
    v = PolyPoly.monomial(0, 1)
    basis, norms = gram_schmidt([v, v.scale(3), PolyPoly.monomial(1, 2)])
    assert len(basis) == 2


def test_project_S_examples(rng):
    for N in range(1, 5):
        assert project_S(PolyPoly.monomial(1, 0), N) == PolyPoly()
        f = PolyPoly({(j, j + 2): j + 1 for j in range(N)})
        assert project_S(f, N) == f
    for _ in range(20):
        f = random_polypoly(rng, 6, 5)
        assert norm_sq(project_S(f, 3)).exact_at(1) <= norm_sq(f).exact_at(1)


def test_project_conjF0_examples():
    assert project_conjF0(PolyPoly.monomial(1, 0)) == PolyPoly.monomial(1, 0)
    for n in range(5):
        assert project_conjF0(PolyPoly.monomial(0, n)) == PolyPoly()
    assert project_conjF0(PolyPoly.monomial(1, 2)) == PolyPoly()
    # zbar^2 z projects onto zbar with coefficient <zbar^2 z, zbar>/||zbar||^2 = 2/m
    assert project_conjF0(PolyPoly.monomial(2, 1)) == PolyPoly.monomial(1, 0, Scalar.m_power(-1, 2))


def test_project_corrector_examples(rng):
    for _ in range(10):
        assert project_corrector(random_polypoly(rng, 5, 4), 1) == PolyPoly()
    assert project_corrector(PolyPoly.monomial(1, 0), 2) == PolyPoly.monomial(1, 0)
    with pytest.raises(ValueError):
        corrector_sector_basis(3, 0)


def test_corrector_rank(rng):
    for N in range(1, 6):
        images = [project_corrector(random_polypoly(rng, N + 1, 6), N) for _ in range(60)]
        assert gram_rank(images) <= N * (N - 1) // 2
    assert gram_rank([project_corrector(PolyPoly.monomial(j, k), 4) for j in range(4) for k in range(j)]) == 6


@pytest.mark.parametrize("name", sorted(PROJECTIONS))
def test_projection_laws(name, rng):
    P = PROJECTIONS[name]
    for _ in range(12):
        f = random_polypoly(rng, 10, 6)
        g = random_polypoly(rng, 10, 6)
        pf = P(f)
        assert P(pf) == pf
        assert inner(pf, g) == inner(f, P(g))
        assert norm_sq(f) == norm_sq(pf) + norm_sq(f - pf)


def test_S_nesting(rng):
    for _ in range(15):
        f = random_polypoly(rng, 8, 6)
        vals = [norm_sq(project_S(f, N)).exact_at(1) for N in range(1, 6)]
        assert vals == sorted(vals)


def test_F_decomposes_into_S_and_corrector(rng):
    for _ in range(15):
        f = random_polypoly(rng, 8, 6)
        for N in range(1, 5):
            assert project_F_generic(f, N) == project_S(f, N) + project_corrector(f, N)


def test_image_in_kernel(rng):
    for _ in range(15):
        f = random_polypoly(rng, 9, 6)
        for N in range(1, 5):
            assert dbar(project_F_generic(f, N), N) == PolyPoly()


def test_gram_rank_matches_symbolic_gram(rng):
    from fockhankel.projection import _rank

    vecs = [random_polypoly(rng, 3, 3) for _ in range(12)] + [PolyPoly()]
    for m in (Fraction(1), Fraction(2, 3)):
        naive = [[inner(a, b).exact_at(m) for b in vecs] for a in vecs]
        assert gram_rank(vecs, m) == _rank(naive)
