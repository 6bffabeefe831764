"""
Quadrature as an independent check
==================================

Gauss-Laguerre rules from the Golub-Welsch eigenproblem reproduce the exact
moments and inner products in floating point.
"""

from fractions import Fraction

from fockhankel.laguerre import moment_I
from fockhankel.oracle import gauss_laguerre, quad_inner, quad_moment
from fockhankel.polyanalytic import basis_element, inner

rule = gauss_laguerre(2)
print("2-node rule:", rule.nodes, rule.weights)

for a, b, c in [(2, 1, 1), (12, 6, 3), (19, 10, 10)]:
    print(f"I_({a},{b},{c}): exact {moment_I(a, b, c)}, quadrature {quad_moment(a, b, c):.6g}")

m = Fraction(3)
x = basis_element("e1", (4, 2), N=3)
y = basis_element("e2", (0, 2), N=3)
print("<x, x> exact", inner(x.expansion, x.expansion).evaluate(m), " quad", quad_inner(x.expansion, x.expansion, m))
print("<x, y> exact", inner(x.expansion, y.expansion).evaluate(m), " quad", quad_inner(x.expansion, y.expansion, m))
