"""Roots to coefficients: the Vieta map and its symmetric-function view."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ComplexTuple, MonicPolynomial, RootMultiset, _multiset, _tuple

__all__ = ["SymmetricValues", "expand", "symmetric_values"]


def _linear_factor_product(zs: np.ndarray) -> np.ndarray:
    """Coefficients of prod (z - z_j), lowest degree first, leading 1 included."""
    n = zs.size
    c = np.zeros(n + 1, dtype=np.complex128)
    c[0] = 1.0
    # after step k, c[0..k] holds the product of the first k factors
    for k, root in enumerate(zs, start=1):
        c[1 : k + 1] = c[0:k] - root * c[1 : k + 1]
        c[0] = -root * c[0]
    return c


def expand(V: RootMultiset) -> MonicPolynomial:
    """The monic polynomial whose roots are exactly ``V``.

    >>> expand(RootMultiset([1j, -1j])).coeffs.tolist()
    [(1+0j), 0j]
    """
    V = _multiset(V)
    c = _linear_factor_product(V.elems)
    return MonicPolynomial(c[:-1])


@dataclass(frozen=True)
class SymmetricValues:
    """Signed elementary symmetric functions of a tuple.

    ``psi[k]`` is (-1)^(n-k) e_{n-k}(z_1, ..., z_n), i.e. the coefficient a_k
    of z^k in prod (z - z_j).
    """

    psi: np.ndarray

    def as_polynomial(self) -> MonicPolynomial:
        return MonicPolynomial(self.psi)

    def __getitem__(self, k: int) -> complex:
        return complex(self.psi[k])

    def __len__(self):
        return self.psi.size


def symmetric_values(u: ComplexTuple) -> SymmetricValues:
    u = _tuple(u)
    z = u.entries
    n = z.size
    # e[k] = e_k of the entries seen so far
    e = np.zeros(n + 1, dtype=np.complex128)
    e[0] = 1.0
    for k, zk in enumerate(z, start=1):
        e[1 : k + 1] = e[1 : k + 1] + zk * e[0:k]
    signs = np.array([(-1.0) ** (n - k) for k in range(n)])
    psi = signs * e[n:0:-1]
    psi.setflags(write=False)
    return SymmetricValues(psi)
