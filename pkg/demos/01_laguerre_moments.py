"""
Laguerre polynomials and their Gamma moments
============================================

Exact coefficients, stable float evaluation, and the moment integrals
int_0^inf y^a L_b^c(y) e^{-y} dy that drive every projection formula.
"""

from fockhankel.laguerre import (
    identity_gould,
    identity_vandermonde,
    laguerre_coeffs,
    laguerre_eval,
    moment_I,
    moment_I_closed,
)

# Exact coefficients of L_2^0(y) = 1 - 2y + y^2/2
print("L_2^0 coefficients:", [str(c) for c in laguerre_coeffs(2, 0).coeffs])

# Float evaluation uses the three-term recurrence; compare with exact Horner
lag = laguerre_coeffs(25, 3)
print("L_25^3(40): recurrence", laguerre_eval(25, 3, 40.0), " exact", float(lag(40)))

# Moments: termwise sum versus the closed form with binom(n, s - r)
for n, r, s in [(2, 1, 1), (6, 3, 4), (10, 2, 7)]:
    print(f"I_({n},{r},{n - s}) = {moment_I(n, r, n - s)}  closed form {moment_I_closed(n, r, s)}")

# The two binomial identities, checked exhaustively on a small box
print("Gould identity holds up to 20:", all(identity_gould(r, n, s) for r in range(21) for n in range(21) for s in range(21)))
print("Vandermonde holds up to 20:", all(identity_vandermonde(n, s) for n in range(21) for s in range(21)))
