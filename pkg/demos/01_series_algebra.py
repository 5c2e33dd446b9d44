#!/usr/bin/env python3
"""Tour of the eps-series algebra that carries every regularized result.

Every quantity in the library is a truncated Laurent series in eps = d - 4
with log(eps) channels.  This script walks through the ring operations,
division and logs of series with poles, and the standard expansions of
Gamma and power factors around four dimensions.
"""

from loopentropy import EpsSeries, gamma_series, power_series

# A pole series and an exact monomial: (1/eps) * eps collapses to 1.
pole = EpsSeries.monomial(1.0, -1)
eps = EpsSeries.monomial(1.0, 1)
print("1/eps * eps      =", (pole * eps).terms())

# Geometric inversion: 1/(1 + eps) to the truncation order.
unit = EpsSeries({(0, 0): 1.0, (1, 0): 1.0}, kmax=5)
print("1/(1+eps)        =", [(k, c.real) for k, l, c in unit.inverse().terms()])

# Logs of series with pole prefactors pick up a log(eps) channel; the
# (0, 1) key below is the coefficient of log(eps).
print("log(3/eps)       =", EpsSeries.monomial(3.0, -1).log().terms())

# log and exp invert each other on invertible series.
series = EpsSeries({(-1, 0): 2.0, (0, 0): 0.7, (1, 0): -0.3}, kmax=5)
print("exp(log(s)) == s :", (series.log().exp() - series).max_abs() < 1e-14)

# Gamma(-1 + eps) starts with a simple pole of residue -1 and constant
# gamma_E - 1; the expansion machinery handles every nonpositive integer.
g = gamma_series(-1, 1.0, order=4)
print("Gamma(-1+eps)    = %.6f/eps %+.6f + O(eps)" % (
    g.coefficient(-1, 0).real, g.coefficient(0, 0).real))

# Scale factors mu^-eps keep the coupling dimensionless; their expansion is
# a plain exponential series in -eps log(mu).
mu_factor = power_series(2.0, -1.0, order=3)
print("2^-eps           =", [(k, round(c.real, 6)) for k, l, c in mu_factor.terms()])

# Truncation bookkeeping is explicit: mixing orders downgrades the result.
coarse = EpsSeries({(0, 0): 1.0}, kmax=2)
fine = EpsSeries({(0, 0): 1.0}, kmax=8)
print("kmax of product  =", (coarse * fine).kmax, "(weaker operand wins)")
