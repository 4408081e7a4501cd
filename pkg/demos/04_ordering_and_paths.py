"""
Sorted roots jump; tracked roots do not
=======================================

Sorting roots lexicographically is a tempting way to turn a multiset into
a tuple, but the sorted tuple can jump while the polynomial barely moves.
Following roots by matching consecutive root sets avoids this.
"""

from rootspace import MonicPolynomial, connect_in_D, discontinuity_witness, track

w = discontinuity_witness(6)
for k, (d, o) in enumerate(zip(w.dF_gaps, w.ordered_gaps), start=1):
    print(f"k={k}: multiset distance {d:.4f}   sorted-tuple distance {o:.4f}")

# z^2 + 1 -> z^2 - 1 passes through the double root of z^2 at t = 1/2
T = track(MonicPolynomial([1, 0]), MonicPolynomial([-1, 0]), steps=8)
for t, V, d in zip(T.ts[1:], T.root_sets[1:], T.step_dFs):
    print(f"t={t:.3f} roots {V.elems.round(4)} step {d:.4f}")

# two coordinates can swap places without ever meeting
P = connect_in_D([0, 1], [1, 0])
print(f"{len(P)} samples, smallest coordinate gap along the way {P.min_gap():.3f}")
