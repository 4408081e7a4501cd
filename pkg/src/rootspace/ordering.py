"""Total orders on the complex plane and why sorting roots is not continuous.

Sorting a root multiset gives a canonical tuple, but any such selection
jumps: for p_k = z^2 + 1 + 2i/k - 1/k^2 the roots -1/k + i and 1/k - i
approach the roots of z^2 + 1 as multisets, while the lexicographically
sorted pairs stay at sup distance >= 2 from the sorted pair (-i, i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .core import (
    ComplexTuple,
    MonicPolynomial,
    RootMultiset,
    _finite_complex,
    _multiset,
    multiset_metric,
    sup_metric,
)
from .rootfinder import roots_of

__all__ = [
    "OrderKind",
    "DiscontinuityWitness",
    "lex_compare",
    "mod_arg_compare",
    "order_tuple",
    "discontinuity_witness",
]


class OrderKind(str, Enum):
    LEXICOGRAPHIC = "lexicographic"
    MODULUS_ARGUMENT = "modulus_argument"


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def _lex_key(z: complex):
    return (z.real, z.imag)


def _arg(z: complex) -> float:
    """Argument in (-pi, pi], with arg(0) = 0."""
    if z == 0:
        return 0.0
    t = math.atan2(z.imag, z.real)
    # atan2 returns -pi for a negative real axis point with imag == -0.0
    return math.pi if t == -math.pi else t


def _mod_arg_key(z: complex):
    # the trailing lex key only separates distinct numbers whose rounded
    # modulus and argument coincide, keeping the order antisymmetric
    return (abs(z), _arg(z), z.real, z.imag)


def lex_compare(z: complex, w: complex) -> int:
    """-1, 0 or 1 as z precedes, equals or follows w (real part first, then imaginary)."""
    z, w = _finite_complex(z), _finite_complex(w)
    return _cmp(_lex_key(z), _lex_key(w))


def mod_arg_compare(z: complex, w: complex) -> int:
    """Compare by modulus, then by argument in (-pi, pi]."""
    z, w = _finite_complex(z), _finite_complex(w)
    return _cmp(_mod_arg_key(z), _mod_arg_key(w))


_KEYS: dict[OrderKind, Callable[[complex], tuple]] = {
    OrderKind.LEXICOGRAPHIC: _lex_key,
    OrderKind.MODULUS_ARGUMENT: _mod_arg_key,
}


def order_tuple(V: RootMultiset, kind: OrderKind | str = OrderKind.LEXICOGRAPHIC) -> ComplexTuple:
    """The unique nondecreasing arrangement of ``V`` under the chosen order."""
    V = _multiset(V)
    key = _KEYS[OrderKind(kind)]
    return ComplexTuple(sorted(V.elems.tolist(), key=key))


@dataclass(frozen=True)
class DiscontinuityWitness:
    limit_poly: MonicPolynomial
    sequence_polys: tuple[MonicPolynomial, ...]
    dF_gaps: tuple[float, ...]
    ordered_gaps: tuple[float, ...]


def _snap(V: RootMultiset) -> RootMultiset:
    """Zero out components at rounding level relative to the element's modulus.

    Their sign is noise, and the lexicographic order flips on exactly that sign.
    """
    z = V.elems
    floor = 8 * np.finfo(float).eps * np.abs(z)
    re = np.where(np.abs(z.real) <= floor, 0.0, z.real)
    im = np.where(np.abs(z.imag) <= floor, 0.0, z.imag)
    return RootMultiset(re + 1j * im)


def discontinuity_witness(K: int) -> DiscontinuityWitness:
    """Evaluate the z^2 + 1 + 2i/k - 1/k^2 sequence for k = 1..K.

    ``dF_gaps[k-1]`` equals 1/k while ``ordered_gaps[k-1]`` equals
    sqrt(1/k^2 + 4) >= 2 for the lexicographic selection.
    """
    if K < 2:
        raise ValueError("K must be at least 2")
    limit = MonicPolynomial([1.0, 0.0])
    limit_roots = _snap(roots_of(limit))
    limit_sorted = order_tuple(limit_roots)
    polys, df, od = [], [], []
    for k in range(1, K + 1):
        p = MonicPolynomial([1 + 2j / k - 1 / k**2, 0.0])
        r = _snap(roots_of(p))
        polys.append(p)
        df.append(multiset_metric(r, limit_roots).value)
        od.append(sup_metric(order_tuple(r), limit_sorted))
    return DiscontinuityWitness(limit, tuple(polys), tuple(df), tuple(od))
