import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootspace import (
    ComplexTuple,
    MonicPolynomial,
    RootMultiset,
    multiset_metric,
    multiset_metric_naive,
    permute,
    poly_metric,
    project,
    sup_metric,
    zero_multiset,
)

from conftest import disk

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
cnum = st.builds(complex, coord, coord)


def multisets(n):
    return st.lists(cnum, min_size=n, max_size=n).map(RootMultiset)


# --- construction -----------------------------------------------------------

@pytest.mark.parametrize("bad", [[1, float("nan")], [1, complex(0, float("inf"))]])
def test_non_finite_rejected(bad):
    with pytest.raises(ValueError):
        MonicPolynomial(bad)
    with pytest.raises(ValueError):
        RootMultiset(bad)
    with pytest.raises(ValueError):
        ComplexTuple(bad)


def test_degree_one_rejected():
    with pytest.raises(ValueError):
        MonicPolynomial([1.0])
    with pytest.raises(ValueError):
        RootMultiset([1.0])


def test_values_are_immutable():
    p = MonicPolynomial([1, 2])
    with pytest.raises(ValueError):
        p.coeffs[0] = 5
    with pytest.raises(AttributeError):
        p.coeffs = None


def test_multiset_equality_ignores_order():
    assert RootMultiset([1, 2, 2j]) == RootMultiset([2j, 1, 2])
    assert RootMultiset([1, 1, 2]) != RootMultiset([1, 2, 2])
    assert hash(RootMultiset([1, 2])) == hash(RootMultiset([2, 1]))


# --- poly_metric / sup_metric -----------------------------------------------

def test_poly_metric_examples():
    assert poly_metric([1, 0], [1, 0]) == 0
    k = 1
    g = MonicPolynomial([1 + 2j / k - 1 / k**2, 0])
    assert poly_metric([1, 0], g) == pytest.approx(math.sqrt(5), abs=1e-15)
    assert poly_metric([0, 0, 0], [0, 2, 0]) == 2


def test_poly_metric_degree_mismatch():
    with pytest.raises(ValueError, match="degree mismatch"):
        poly_metric([1, 0], [1, 0, 0])


def test_sup_metric_examples():
    assert sup_metric([1, 2j], [1, 2j]) == 0
    assert sup_metric([0, 0], [3, 4j]) == 4
    assert sup_metric([1j, -1j], [-1j, 1j]) == 2
    with pytest.raises(ValueError):
        sup_metric([1, 2], [1, 2, 3])


# --- multiset metric --------------------------------------------------------

def test_paper_pair_distance():
    k = 5
    r = multiset_metric([-1 / k + 1j, 1 / k - 1j], [-1j, 1j])
    assert r.value == pytest.approx(0.2, abs=1e-15)
    assert r.permutation == (1, 0)


def test_identical_sets_distance_zero_with_identity():
    V = RootMultiset([1 + 1j, -2, 3j, 0.5])
    r = multiset_metric(V, V)
    assert r.value == 0
    assert r.permutation == (0, 1, 2, 3)


def test_two_point_example_both_evaluators():
    # identity costs max(1, 0.5) = 1, swap costs max(10.5, 9) = 10.5
    for f in (multiset_metric, multiset_metric_naive):
        r = f([0, 10], [1, 10.5])
        assert r.value == 1.0
        assert r.permutation == (0, 1)


def test_naive_trivial_cases():
    assert multiset_metric_naive([0, 0, 0], [0, 0, 0]).value == 0
    assert multiset_metric_naive([1, 2], [2, 1]).value == 0


def test_naive_size_limit():
    with pytest.raises(ValueError, match="oracle size limit"):
        multiset_metric_naive(np.arange(9), np.arange(9))


def test_size_mismatch():
    with pytest.raises(ValueError, match="size mismatch"):
        multiset_metric([1, 2], [1, 2, 3])
    with pytest.raises(ValueError, match="size mismatch"):
        multiset_metric_naive([1, 2], [1, 2, 3])


def test_value_is_realized_by_permutation(rng):
    for n in range(2, 9):
        U, V = RootMultiset(disk(rng, 3, n)), RootMultiset(disk(rng, 3, n))
        r = multiset_metric(U, V)
        assert sorted(r.permutation) == list(range(n))
        assert r.value == np.abs(U.elems - V.elems[list(r.permutation)]).max()


def test_value_is_a_pairwise_distance(rng):
    U, V = RootMultiset(disk(rng, 1, 6)), RootMultiset(disk(rng, 1, 6))
    d = np.abs(U.elems[:, None] - V.elems[None, :])
    assert multiset_metric(U, V).value in set(d.ravel().tolist())


def test_handles_ties():
    U = RootMultiset([0, 1, 2, 3])
    V = RootMultiset([1, 2, 3, 4])
    assert multiset_metric(U, V).value == multiset_metric_naive(U, V).value == 1


def test_large_n_is_tractable(rng):
    U = RootMultiset(disk(rng, 1, 300))
    shift = RootMultiset(U.elems[::-1] + 1e-3)
    assert multiset_metric(U, shift).value <= 1e-3 + 1e-15


def test_distance_to_zero_multiset_is_max_modulus(rng):
    for n in range(2, 8):
        V = RootMultiset(disk(rng, 4, n))
        assert multiset_metric(V, zero_multiset(n)).value == np.abs(V.elems).max()


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(multisets(n), multisets(n))))
def test_matches_naive_oracle(pair):
    U, V = pair
    assert abs(multiset_metric(U, V).value - multiset_metric_naive(U, V).value) <= 1e-12


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(multisets(n), multisets(n), multisets(n))))
def test_metric_axioms(triple):
    U, V, W = triple
    d_uv = multiset_metric(U, V).value
    assert d_uv == multiset_metric(V, U).value
    assert d_uv <= multiset_metric(U, W).value + multiset_metric(W, V).value + 1e-12
    assert (d_uv == 0) == bool(np.array_equal(U.canonical(), V.canonical()))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(multisets(n), multisets(n))), st.randoms())
def test_permutation_invariance(pair, rnd):
    U, V = pair
    a, b = list(U.elems), list(V.elems)
    rnd.shuffle(a)
    rnd.shuffle(b)
    assert abs(multiset_metric(a, b).value - multiset_metric(U, V).value) <= 1e-15


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.lists(cnum, min_size=max(n, 2), max_size=max(n, 2)),
    st.lists(cnum, min_size=max(n, 2), max_size=max(n, 2)))))
def test_projection_is_contraction(pair):
    u, v = ComplexTuple(pair[0]), ComplexTuple(pair[1])
    assert multiset_metric(project(u), project(v)).value <= sup_metric(u, v) + 1e-12


# --- project / permute ------------------------------------------------------

def test_project_examples():
    assert project([1j, -1j]) == RootMultiset([1j, -1j])
    P = project([1, 1, 2])
    assert sorted(P.elems.real.tolist()) == [1, 1, 2]
    u, v = ComplexTuple([1j, -1j]), ComplexTuple([-1j, 1j])
    assert multiset_metric(project(u), project(v)).value == 0
    assert sup_metric(u, v) == 2


def test_permute():
    u = ComplexTuple([1, 2, 3])
    assert permute(u, [0, 1, 2]) == u
    assert list(permute(u, [1, 2, 0])) == [2, 3, 1]
    with pytest.raises(ValueError, match="bijection"):
        permute(u, [0, 0, 1])


def test_permute_keeps_multiset(rng):
    for n in range(2, 8):
        u = ComplexTuple(disk(rng, 1, n))
        sigma = rng.permutation(n)
        assert project(permute(u, sigma)) == project(u)
