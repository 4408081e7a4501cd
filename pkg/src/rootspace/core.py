"""Domain types and the three metrics.

Polynomials are compared coefficientwise (``poly_metric``), ordered tuples
by the sup norm (``sup_metric``), and unordered root multisets by the
bottleneck matching distance (``multiset_metric``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

__all__ = [
    "MonicPolynomial",
    "RootMultiset",
    "ComplexTuple",
    "MatchingResult",
    "poly_metric",
    "sup_metric",
    "multiset_metric",
    "multiset_metric_naive",
    "project",
    "permute",
    "zero_multiset",
    "NAIVE_SIZE_LIMIT",
]

NAIVE_SIZE_LIMIT = 8

ComplexLike = Union[complex, float, int]


def _as_complex_array(values: Iterable[ComplexLike], what: str) -> np.ndarray:
    try:
        arr = np.array(list(values), dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"{what}: entries must be complex numbers") from exc
    if arr.ndim != 1:
        raise ValueError(f"{what}: expected a flat sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what}: non-finite entry")
    arr.setflags(write=False)
    return arr


def _lex_sorted(arr: np.ndarray) -> np.ndarray:
    return arr[np.lexsort((arr.imag, arr.real))]


@dataclass(frozen=True, eq=False)
class MonicPolynomial:
    """z^n + a_{n-1} z^{n-1} + ... + a_0, stored as (a_0, ..., a_{n-1})."""

    coeffs: np.ndarray

    def __init__(self, coeffs: Iterable[ComplexLike]):
        arr = _as_complex_array(coeffs, "MonicPolynomial")
        if arr.size < 2:
            raise ValueError("MonicPolynomial: degree must be at least 2")
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.size

    def full_coeffs(self) -> np.ndarray:
        """Coefficients highest degree first, leading 1 included (numpy.polyval order)."""
        return np.concatenate(([1.0 + 0j], self.coeffs[::-1]))

    def __call__(self, z):
        return np.polyval(self.full_coeffs(), z)

    def __eq__(self, other):
        if not isinstance(other, MonicPolynomial):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(np.all(self.coeffs == other.coeffs))

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"MonicPolynomial({self.coeffs.tolist()})"


@dataclass(frozen=True, eq=False)
class RootMultiset:
    """n complex numbers with multiplicity; storage order carries no meaning."""

    elems: np.ndarray

    def __init__(self, elems: Iterable[ComplexLike]):
        arr = _as_complex_array(elems, "RootMultiset")
        if arr.size < 2:
            raise ValueError("RootMultiset: need at least 2 elements")
        object.__setattr__(self, "elems", arr)

    @property
    def size(self) -> int:
        return self.elems.size

    def __len__(self):
        return self.elems.size

    def __iter__(self):
        return iter(self.elems.tolist())

    def canonical(self) -> np.ndarray:
        """Elements sorted by (re, im); equal multisets give equal arrays."""
        return _lex_sorted(self.elems)

    def __eq__(self, other):
        if not isinstance(other, RootMultiset):
            return NotImplemented
        return self.size == other.size and bool(np.all(self.canonical() == other.canonical()))

    def __hash__(self):
        return hash(self.canonical().tobytes())

    def __repr__(self):
        return f"RootMultiset({self.elems.tolist()})"


@dataclass(frozen=True, eq=False)
class ComplexTuple:
    """Ordered n-tuple of complex numbers."""

    entries: np.ndarray

    def __init__(self, entries: Iterable[ComplexLike]):
        arr = _as_complex_array(entries, "ComplexTuple")
        if arr.size < 1:
            raise ValueError("ComplexTuple: empty tuple")
        object.__setattr__(self, "entries", arr)

    def __len__(self):
        return self.entries.size

    def __iter__(self):
        return iter(self.entries.tolist())

    def __getitem__(self, i):
        return complex(self.entries[i])

    def __eq__(self, other):
        if not isinstance(other, ComplexTuple):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.all(self.entries == other.entries))

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f"ComplexTuple({self.entries.tolist()})"


@dataclass(frozen=True)
class MatchingResult:
    """Bottleneck matching: ``permutation[j]`` is the index in V paired with U[j] (0-based)."""

    value: float
    permutation: tuple[int, ...]


def _poly(p) -> MonicPolynomial:
    return p if isinstance(p, MonicPolynomial) else MonicPolynomial(p)


def _multiset(v) -> RootMultiset:
    return v if isinstance(v, RootMultiset) else RootMultiset(v)


def _tuple(u) -> ComplexTuple:
    return u if isinstance(u, ComplexTuple) else ComplexTuple(u)


def zero_multiset(n: int) -> RootMultiset:
    """The multiset of n zeros (roots of z^n)."""
    return RootMultiset(np.zeros(n, dtype=np.complex128))


def poly_metric(f: MonicPolynomial, g: MonicPolynomial) -> float:
    """Largest coefficient difference max_j |a_j - b_j|."""
    f, g = _poly(f), _poly(g)
    if f.degree != g.degree:
        raise ValueError("degree mismatch")
    return float(np.max(np.abs(f.coeffs - g.coeffs)))


def sup_metric(u: ComplexTuple, v: ComplexTuple) -> float:
    u, v = _tuple(u), _tuple(v)
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return float(np.max(np.abs(u.entries - v.entries)))


def _distance_matrix(U: RootMultiset, V: RootMultiset) -> np.ndarray:
    if U.size != V.size:
        raise ValueError("size mismatch")
    return np.abs(U.elems[:, None] - V.elems[None, :])


def _perfect_matching(mask: np.ndarray) -> np.ndarray | None:
    """Row-to-column perfect matching of the boolean adjacency ``mask``, or None."""
    match = maximum_bipartite_matching(csr_matrix(mask), perm_type="column")
    if np.any(match < 0):
        return None
    return match


def multiset_metric(U: RootMultiset, V: RootMultiset) -> MatchingResult:
    """Bottleneck distance between two multisets of equal size.

    The optimum is always one of the n^2 pairwise distances, so we binary
    search the sorted distinct distances and test each candidate threshold
    by asking for a perfect matching on the edges at or below it.
    """
    U, V = _multiset(U), _multiset(V)
    dist = _distance_matrix(U, V)
    levels = np.unique(dist)
    # every row and column has to be matched somewhere
    floor = max(dist.min(axis=1).max(), dist.min(axis=0).max())
    lo = int(np.searchsorted(levels, floor))
    hi = levels.size - 1
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        match = _perfect_matching(dist <= levels[mid])
        if match is None:
            lo = mid + 1
        else:
            hi, best = mid, match
    if best is None:
        best = _perfect_matching(dist <= levels[hi])
    perm = tuple(int(j) for j in best)
    value = float(dist[np.arange(U.size), best].max())
    return MatchingResult(value, perm)


_PERMUTATIONS: dict[int, np.ndarray] = {}


def multiset_metric_naive(U: RootMultiset, V: RootMultiset) -> MatchingResult:
    """Min over all n! permutations of the max matched distance (n <= 8)."""
    U, V = _multiset(U), _multiset(V)
    n = U.size
    if V.size != n:
        raise ValueError("size mismatch")
    if n > NAIVE_SIZE_LIMIT:
        raise ValueError("oracle size limit")
    dist = _distance_matrix(U, V)
    perms = _PERMUTATIONS.get(n)
    if perms is None:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
        _PERMUTATIONS[n] = perms
    costs = dist[np.arange(n), perms].max(axis=1)
    k = int(np.argmin(costs))
    return MatchingResult(float(costs[k]), tuple(int(j) for j in perms[k]))


def project(u: ComplexTuple) -> RootMultiset:
    """Forget the order of a tuple."""
    return RootMultiset(_tuple(u).entries)


def permute(u: ComplexTuple, sigma: Sequence[int]) -> ComplexTuple:
    """Entry j of the result is ``u[sigma[j]]`` (0-based sigma)."""
    u = _tuple(u)
    sigma = list(sigma)
    n = len(u)
    if sorted(sigma) != list(range(n)):
        raise ValueError("sigma is not a bijection")
    return ComplexTuple(u.entries[np.array(sigma, dtype=np.intp)])


def _finite_complex(z: ComplexLike) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("non-finite complex number")
    return z
