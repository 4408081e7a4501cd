"""
Roots to coefficients and back
==============================

``expand`` multiplies out the linear factors; ``roots_of`` recovers the
roots with Aberth-Ehrlich iteration. The round trip is the identity up to
rounding, and the Cauchy bound confines every root to a known disk.
"""

import numpy as np

from rootspace import MonicPolynomial, RootMultiset, cauchy_bound, expand, multiset_metric, roots_of, solve

V = RootMultiset([1, 2, 3])
p = expand(V)
print("(z-1)(z-2)(z-3) coefficients a_0..a_2:", p.coeffs.real)
print("roots back:", np.sort_complex(roots_of(p).elems))

rng = np.random.default_rng(1)
for n in (3, 6, 10):
    W = RootMultiset(2 * (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)))
    err = multiset_metric(roots_of(expand(W)), W).value
    print(f"n={n:2d} round-trip error {err:.2e}")

# every root sits strictly inside the Cauchy disk
q = MonicPolynomial([3 - 1j, 0.5, -2, 4j])
report = solve(q)
print("Cauchy bound", cauchy_bound(q), "largest root modulus", np.abs(report.roots.elems).max())
print("iterations", report.iterations, "scaled residual", report.max_residual)

# a multiple root is found, but only to about the m-th root of machine precision
triple = expand(RootMultiset([0.5, 0.5, 0.5, -1]))
print("triple root error:", multiset_metric(solve(triple).roots, [0.5, 0.5, 0.5, -1]).value)
