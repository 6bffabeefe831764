"""
Projecting onto polyanalytic Fock spaces
========================================

F^{N,m} is the kernel of (d/dzbar)^N. Its Laguerre basis splits by sector
k - j, so the projection of zbar^s z^n is a finite sum that can be computed
two ways: by the closed monomial formula and by expanding against the basis.
"""

from fockhankel.polyanalytic import PolyPoly, basis_element, dbar, inner
from fockhankel.projection import build_sector_basis_S, project_F_generic, project_monomial_F

# A basis vector, stored without its irrational normalization
e = basis_element("e1", (2, 1), N=3)
print("e1(2,1) expansion:", e.expansion)
print("squared norm:", e.norm_sq, " check:", inner(e.expansion, e.expansion) == e.norm_sq)

# Projection of zbar^3 z^5 onto F^{2,m}, both ways
closed = project_monomial_F(3, 5, N=2)
generic = project_F_generic(PolyPoly.monomial(3, 5), N=2)
print("P(zbar^3 z^5) =", closed)
print("paths agree:", closed == generic)
print("image in kernel of dbar^2:", dbar(closed, 2) == PolyPoly())

# zbar^s z^n with s - n >= N has no component in F^{N,m}
print("P(zbar^5 z) onto F^{3,m}:", project_monomial_F(5, 1, N=3))

# Gram-Schmidt basis of the S^{2,m} sector 0: {1, zbar z - 1/m}
print("S^{2,m}, sector 0:", build_sector_basis_S(2, 0).vectors)
