import itertools

import numpy as np
import pytest

from rootspace import MonicPolynomial, RootMultiset, expand, poly_metric, project, symmetric_values, zero_multiset

from conftest import disk


def literal_coefficients(z):
    """a_k = (-1)^(n-k) * sum over (n-k)-subsets of the product: direct enumeration."""
    n = len(z)
    out = []
    for k in range(n):
        m = n - k
        e = sum(np.prod(c) for c in itertools.combinations(z, m))
        out.append((-1) ** m * e)
    return np.array(out, dtype=complex)


def test_expand_examples():
    assert expand(RootMultiset([1j, -1j])) == MonicPolynomial([1, 0])
    assert expand(zero_multiset(5)) == MonicPolynomial(np.zeros(5))
    assert expand(RootMultiset([1, 2, 3])) == MonicPolynomial([-6, 11, -6])


def test_symmetric_values_examples():
    s = symmetric_values([1j, -1j])
    assert s[0] == 1 and s[1] == 0
    assert np.all(symmetric_values([0, 0, 0, 0]).psi == 0)
    assert symmetric_values([1, 2, 3]).psi.tolist() == [-6, 11, -6]


def test_agrees_with_subset_enumeration(rng):
    for n in range(2, 9):
        z = disk(rng, 1.5, n)
        want = literal_coefficients(z)
        scale = 1 + np.abs(want).max()
        assert np.abs(expand(RootMultiset(z)).coeffs - want).max() <= 1e-12 * scale
        assert np.abs(symmetric_values(z).psi - want).max() <= 1e-12 * scale


def test_symmetry_under_permutation(rng):
    for _ in range(200):
        n = int(rng.integers(2, 12))
        z = disk(rng, 1, n)
        a = symmetric_values(z).psi
        b = symmetric_values(z[rng.permutation(n)]).psi
        assert np.abs(a - b).max() <= 1e-12 * (1 + np.abs(a).max())


def test_expand_matches_symmetric_values(rng):
    for _ in range(200):
        n = int(rng.integers(2, 12))
        z = disk(rng, 1, n)
        s = symmetric_values(z)
        d = poly_metric(expand(project(z)), s.as_polynomial())
        assert d <= 1e-12 * (1 + np.abs(s.psi).max())


@pytest.mark.parametrize("h", [1e-3, 1e-6])
def test_lipschitz_on_bounded_sets(rng, h):
    for _ in range(100):
        n = int(rng.integers(2, 9))
        v = disk(rng, 2, n)
        moved = v + h * disk(rng, 1, n)
        d = poly_metric(expand(RootMultiset(v)), expand(RootMultiset(moved)))
        envelope = n * (1 + np.abs(v).max()) ** (n - 1) * 2**n
        assert d / h <= envelope


def test_expand_ignores_storage_order(rng):
    z = disk(rng, 1, 6)
    a = expand(RootMultiset(z)).coeffs
    b = expand(RootMultiset(z[::-1])).coeffs
    assert np.abs(a - b).max() <= 1e-13
