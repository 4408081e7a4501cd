"""
Distances between root multisets
================================

Roots of a polynomial have no natural order, so we compare them as
multisets: pair them up in the best possible way and take the largest
pairing distance. That is a bottleneck assignment problem.
"""

import numpy as np

from rootspace import RootMultiset, multiset_metric, multiset_metric_naive, sup_metric, zero_multiset

# Two pairs of points. Paired as listed they are far apart; swapped, close.
U = RootMultiset([-0.2 + 1j, 0.2 - 1j])
V = RootMultiset([-1j, 1j])
print("sup distance as listed:", sup_metric(U.elems, V.elems))
m = multiset_metric(U, V)
print("multiset distance:     ", m.value, "pairing", m.permutation)

# For small sizes the brute-force definition (all n! pairings) agrees.
rng = np.random.default_rng(0)
A = RootMultiset(rng.normal(size=6) + 1j * rng.normal(size=6))
B = RootMultiset(rng.normal(size=6) + 1j * rng.normal(size=6))
print("bottleneck vs brute force:", multiset_metric(A, B).value, multiset_metric_naive(A, B).value)

# The distance to the all-zero multiset is the largest modulus.
print("d(A, O) =", multiset_metric(A, zero_multiset(6)).value, " max|a| =", np.abs(A.elems).max())

# Sizes in the hundreds are fine for the matching-based evaluator.
big = RootMultiset(rng.normal(size=300) + 1j * rng.normal(size=300))
jittered = RootMultiset(big.elems[::-1] + 1e-6 * rng.normal(size=300))
print("n = 300, jitter 1e-6 ->", multiset_metric(big, jittered).value)
