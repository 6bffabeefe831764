"""
Norm sequences and boundedness of Hankel operators
==================================================

For the symbol zbar^s the operator (I - P_{F^{N,m}}) zbar^s is diagonal on the
standard basis e_n. Its squared column norms are constant s!/m^s when s = N,
and grow like a polynomial of degree s - N when s > N.
"""

from fractions import Fraction

from fockhankel.hankel import apply_big, apply_middle_Y, apply_small, classify, growth_degree, norm_sq_sequence
from fockhankel.polyanalytic import PolyPoly, norm_sq

m = Fraction(1, 2)
for s, N in [(2, 2), (3, 1), (4, 2), (1, 3)]:
    seq = norm_sq_sequence(s, N, n_max=12)  # closed form, cross-checked by projection
    vals = ", ".join(f"{v:g}" for v in seq.evaluate(m))
    print(f"s={s} N={N}: growth degree {growth_degree(seq):>2}  values at m=1/2: {vals}")

# Degree rule for polynomial symbols
g = PolyPoly.analytic([1, 0, 3])  # 1 + 3 z^2
for N in (1, 2, 3):
    c = classify(g, N)
    print(f"g = 1 + 3z^2, N={N}: {c.verdict} (growth evidence {c.evidence['growth_degree']})")

# Small <= middle <= big on one example, exact at m = 1
f = PolyPoly.analytic([2, -1, 0, 1])
print("small ", norm_sq(apply_small(g, f)).exact_at(1))
for N in (1, 2, 3):
    print(f"middle N={N}", norm_sq(apply_middle_Y(g, N, f)).exact_at(1))
print("big   ", norm_sq(apply_big(g, f)).exact_at(1))
