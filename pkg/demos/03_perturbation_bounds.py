"""
How far can roots move?
=======================

Ostrowski's bound and the Rahman-Schmeisser bound turn a coefficient change
into a guaranteed bound on the multiset distance between the root sets.
Near a cluster of roots, the separation radius eta tells how many perturbed
roots land in each disk.
"""

import numpy as np

from rootspace import MonicPolynomial, RootMultiset, certify, cluster_structure, disk_counts, ostrowski

f, g = MonicPolynomial([0, 0]), MonicPolynomial([-0.01, 0])
print("z^2 vs z^2 - 0.01:", ostrowski(f, g))
print(certify(f, g, "ostrowski"))

rng = np.random.default_rng(2)
f = MonicPolynomial(rng.normal(size=5) + 1j * rng.normal(size=5))
for h in (1e-4, 1e-8, 1e-12):
    g = MonicPolynomial(f.coeffs + h)
    c = certify(f, g, "rs")
    print(f"coefficient shift {h:.0e}: moved {c.measured_dF:.2e} <= bound {c.bound_value:.2e}: {c.holds}")

V = RootMultiset([0, 0, 3 + 4j])
S = cluster_structure(V)
print("clusters", S.centers, "multiplicities", S.multiplicities, "eta", S.eta)
U = RootMultiset([0.1, -0.1, 3.1 + 4j])
print("points of U per disk:", disk_counts(V, U))
