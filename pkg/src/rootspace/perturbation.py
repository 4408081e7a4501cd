"""Quantitative root-perturbation certificates and cluster bookkeeping.

Two classical bounds on how far roots move when coefficients move:

* Ostrowski: with Gamma = max over nu of max(|a_nu|^(1/nu), |b_nu|^(1/nu)),
  gamma = 2 Gamma and eps = (sum_nu |b_nu - a_nu| gamma^(n-nu))^(1/n), the
  roots can be paired so every pair is closer than (2n - 1) eps.
* Rahman-Schmeisser: with A = max{1, 2|a_nu|^(1/(n-nu))} taken from the
  reference polynomial and delta the largest coefficient change, roots can
  be paired within 4 A delta^(1/n), but only once delta is small enough.

Ostrowski indexes coefficients from the top (a_nu multiplies x^(n-nu)),
which is the reverse of the storage order used here; see ``_top_indexed``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import MonicPolynomial, RootMultiset, _multiset, _poly, multiset_metric, poly_metric
from .rootfinder import roots_of

__all__ = [
    "OstrowskiData",
    "RSData",
    "ClusterStructure",
    "BoundName",
    "BoundCertificate",
    "RS_SMALL_DELTA",
    "ostrowski",
    "rahman_schmeisser",
    "certify",
    "cluster_structure",
    "disk_counts",
]

# delta at or below which the Rahman-Schmeisser bound is treated as applicable
RS_SMALL_DELTA = 1e-4


@dataclass(frozen=True)
class OstrowskiData:
    gamma_cap: float
    gamma: float
    epsilon: float
    bound: float


@dataclass(frozen=True)
class RSData:
    a_cap: float
    delta: float
    bound: float


class BoundName(str, Enum):
    OSTROWSKI = "ostrowski"
    RAHMAN_SCHMEISSER = "rahman_schmeisser"

    @classmethod
    def parse(cls, name) -> "BoundName":
        if isinstance(name, cls):
            return name
        aliases = {"rs": cls.RAHMAN_SCHMEISSER, "ostrowski": cls.OSTROWSKI,
                   "rahman_schmeisser": cls.RAHMAN_SCHMEISSER}
        try:
            return aliases[str(name).lower()]
        except KeyError:
            raise ValueError(f"unknown bound {name!r}") from None


@dataclass(frozen=True)
class BoundCertificate:
    """One bound evaluated against the measured root displacement.

    ``applicable`` is False only for Rahman-Schmeisser with delta above the
    smallness threshold, where a failing ``holds`` is not a counterexample.
    """

    bound_name: BoundName
    bound_value: float
    measured_dF: float
    holds: bool
    applicable: bool = True


def _check_degrees(f: MonicPolynomial, g: MonicPolynomial) -> None:
    if f.degree != g.degree:
        raise ValueError("degree mismatch")


def _top_indexed(p: MonicPolynomial) -> np.ndarray:
    """Coefficients as (a_1, ..., a_n) with a_nu multiplying z^(n-nu)."""
    return p.coeffs[::-1]


def ostrowski(f: MonicPolynomial, g: MonicPolynomial) -> OstrowskiData:
    f, g = _poly(f), _poly(g)
    _check_degrees(f, g)
    n = f.degree
    a, b = _top_indexed(f), _top_indexed(g)
    nu = np.arange(1, n + 1, dtype=float)
    gamma_cap = float(max(np.max(np.abs(a) ** (1 / nu)), np.max(np.abs(b) ** (1 / nu))))
    gamma = 2.0 * gamma_cap
    total = float(np.sum(np.abs(b - a) * gamma ** (n - nu)))
    epsilon = total ** (1.0 / n)
    return OstrowskiData(gamma_cap, gamma, epsilon, (2 * n - 1) * epsilon)


def rahman_schmeisser(f: MonicPolynomial, g: MonicPolynomial) -> RSData:
    """Rahman-Schmeisser data with ``f`` as the reference polynomial."""
    f, g = _poly(f), _poly(g)
    _check_degrees(f, g)
    n = f.degree
    nu = np.arange(n, dtype=float)
    a_cap = float(max(1.0, np.max(2.0 * np.abs(f.coeffs) ** (1.0 / (n - nu)))))
    delta = poly_metric(f, g)
    return RSData(a_cap, delta, 4.0 * a_cap * delta ** (1.0 / n))


def certify(
    f: MonicPolynomial,
    g: MonicPolynomial,
    which: BoundName | str = BoundName.OSTROWSKI,
    small_delta: float = RS_SMALL_DELTA,
) -> BoundCertificate:
    """Solve both polynomials and compare their root distance to a bound.

    Raises ``ConvergenceError`` if either root solve fails.
    """
    f, g = _poly(f), _poly(g)
    _check_degrees(f, g)
    which = BoundName.parse(which)
    applicable = True
    if which is BoundName.OSTROWSKI:
        bound = ostrowski(f, g).bound
    else:
        data = rahman_schmeisser(f, g)
        bound = data.bound
        applicable = data.delta <= small_delta
    measured = multiset_metric(roots_of(f), roots_of(g)).value
    return BoundCertificate(which, bound, measured, measured <= bound, applicable)


@dataclass(frozen=True)
class ClusterStructure:
    centers: tuple[complex, ...]
    multiplicities: tuple[int, ...]
    eta: float


def _separation_radius(centers: np.ndarray) -> float:
    if centers.size == 1:
        return 1.0
    d = np.abs(centers[:, None] - centers[None, :])
    return 0.5 * float(d[~np.eye(centers.size, dtype=bool)].min())


def cluster_structure(V: RootMultiset, tol: float = 0.0) -> ClusterStructure:
    """Merge elements of ``V`` within ``tol`` of each other (single linkage).

    Each cluster is represented by its centroid and its size. ``eta`` is half
    the smallest distance between centroids, or 1 for a single cluster.
    Clusters are reported in (re, im) order of their lexicographically
    smallest member, so the result does not depend on storage order.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    V = _multiset(V)
    z = V.canonical()
    n = z.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    close = np.abs(z[:, None] - z[None, :]) <= tol
    for i in range(n):
        for j in range(i + 1, n):
            if close[i, j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    # roots are the smallest index in each group, i.e. the lex-smallest member
    members = [groups[r] for r in sorted(groups)]
    centers = np.array([z[idx].mean() if len(idx) > 1 else z[idx[0]] for idx in members])
    mults = tuple(len(idx) for idx in members)
    return ClusterStructure(tuple(complex(c) for c in centers), mults, _separation_radius(centers))


def disk_counts(V: RootMultiset, U: RootMultiset, tol: float = 0.0) -> tuple[int, ...]:
    """How many elements of ``U`` fall in the open disk of radius eta(V) about each cluster of ``V``.

    When d_F(V, U) < eta(V) these counts equal the cluster multiplicities.
    """
    V, U = _multiset(V), _multiset(U)
    if V.size != U.size:
        raise ValueError("size mismatch")
    S = cluster_structure(V, tol)
    centers = np.array(S.centers)
    inside = np.abs(U.elems[None, :] - centers[:, None]) < S.eta
    return tuple(int(c) for c in inside.sum(axis=1))
