"""Paths through tuples with distinct coordinates, and root tracking.

``connect_in_D`` joins two tuples with pairwise-distinct coordinates by a
piecewise-linear path that never lets two coordinates collide. It routes
through an auxiliary tuple u placed on a circle well outside every
coordinate of the endpoints, moving one coordinate at a time:
v -> (u1, v2, ...) -> ... -> u -> (w1, u2, ...) -> ... -> w.

``track`` follows the roots of (1 - t) p + t q from t = 0 to t = 1, linking
consecutive root sets by bottleneck matchings and bisecting any step whose
root displacement looks too large for the coefficient change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ComplexTuple,
    MonicPolynomial,
    RootMultiset,
    _poly,
    _tuple,
    multiset_metric,
)
from .perturbation import rahman_schmeisser
from .rootfinder import roots_of

__all__ = [
    "TuplePath",
    "RootTrajectory",
    "TrackingError",
    "connect_in_D",
    "min_coordinate_gap",
    "track",
]


def min_coordinate_gap(entries: np.ndarray) -> float:
    """Smallest |x_i - x_j| over i != j (inf for a 1-tuple)."""
    entries = np.asarray(entries)
    n = entries.size
    if n < 2:
        return math.inf
    d = np.abs(entries[:, None] - entries[None, :])
    return float(d[~np.eye(n, dtype=bool)].min())


@dataclass(frozen=True)
class TuplePath:
    """Samples of a piecewise-linear path; row s of ``samples`` is one tuple."""

    samples: np.ndarray
    max_step: float

    def __len__(self):
        return self.samples.shape[0]

    def tuples(self) -> list[ComplexTuple]:
        return [ComplexTuple(row) for row in self.samples]

    def min_gap(self) -> float:
        """Smallest coordinate gap over all samples."""
        return min(min_coordinate_gap(row) for row in self.samples)

    def step_sizes(self) -> np.ndarray:
        """Sup distance between consecutive samples."""
        return np.abs(np.diff(self.samples, axis=0)).max(axis=1)


# sample counts are padded so rounding never pushes a step past the budget
_STEP_MARGIN = 1 + 1e-9


def _segment(a: complex, b: complex, max_step: float) -> list[complex]:
    m = max(1, math.ceil(abs(b - a) * _STEP_MARGIN / max_step))
    return [a + (b - a) * (s / m) for s in range(1, m + 1)]


def _arc(c: complex, r: float, th0: float, sweep: float, max_step: float) -> list[complex]:
    # chord between samples is at most r * |sweep| / m
    m = max(1, math.ceil(r * abs(sweep) * _STEP_MARGIN / max_step))
    return [c + r * complex(math.cos(th0 + sweep * s / m), math.sin(th0 + sweep * s / m))
            for s in range(1, m + 1)]


def _avoiding_curve(a: complex, b: complex, obstacles: list[complex], max_step: float) -> list[complex]:
    """Points from a (exclusive) to b (inclusive) that keep clear of ``obstacles``.

    Follows the segment a -> b, replacing each piece that would pass within
    r of an obstacle by the shorter arc of the circle of radius r about it,
    where r is a third of the smallest gap among a, b and the obstacles.
    Those circles are pairwise disjoint and contain neither endpoint.
    """
    pts = np.array([a, b, *obstacles])
    r = min_coordinate_gap(pts) / 3.0
    d = b - a
    L = abs(d)
    u = d / L
    crossings = []
    for c in obstacles:
        # foot of the perpendicular from c, as a parameter along the segment
        s0 = ((c - a) * u.conjugate()).real
        h = abs(((c - a) * u.conjugate()).imag)
        if h < r and 0 < s0 < L:
            half = math.sqrt(r * r - h * h)
            crossings.append((s0 - half, s0 + half, c))
    crossings.sort(key=lambda x: x[0])

    out: list[complex] = []
    cur = a
    for s_in, s_out, c in crossings:
        p_in, p_out = a + u * s_in, a + u * s_out
        out += _segment(cur, p_in, max_step)
        th0 = math.atan2((p_in - c).imag, (p_in - c).real)
        th1 = math.atan2((p_out - c).imag, (p_out - c).real)
        sweep = math.remainder(th1 - th0, 2 * math.pi)
        if abs(sweep) >= math.pi - 1e-12:
            sweep = math.pi
        out += _arc(c, r, th0, sweep, max_step)
        out[-1] = p_out
        cur = p_out
    out += _segment(cur, b, max_step)
    out[-1] = b
    return out


def connect_in_D(v: ComplexTuple, w: ComplexTuple, max_step: float | None = None) -> TuplePath:
    """A path from ``v`` to ``w`` along which no two coordinates ever coincide.

    Every sample, and every point on the straight pieces between samples,
    has pairwise-distinct coordinates. Consecutive samples are at most
    ``max_step`` apart in the sup norm (default 0.05 * (1 + largest modulus)).
    """
    v, w = _tuple(v), _tuple(w)
    if len(v) != len(w):
        raise ValueError("length mismatch")
    if min_coordinate_gap(v.entries) == 0 or min_coordinate_gap(w.entries) == 0:
        raise ValueError("coordinates not distinct")
    n = len(v)
    scale = 1.0 + float(max(np.abs(v.entries).max(), np.abs(w.entries).max()))
    if max_step is None:
        max_step = 0.05 * scale
    start, end = v.entries.copy(), w.entries.copy()
    if np.array_equal(start, end):
        return TuplePath(np.vstack([start, end]), max_step)

    changed = np.flatnonzero(start != end)
    if changed.size == 1:
        plan = [(int(changed[0]), end[changed[0]])]
    else:
        R = 2.0 * scale
        u = R * np.exp(2j * np.pi * np.arange(n) / n)
        plan = [(k, u[k]) for k in range(n)] + [(k, end[k]) for k in range(n)]

    rows = [start]
    cur = start.copy()
    for k, target in plan:
        others = [complex(x) for j, x in enumerate(cur) if j != k]
        for z in _avoiding_curve(complex(cur[k]), complex(target), others, max_step):
            nxt = cur.copy()
            nxt[k] = z
            rows.append(nxt)
        cur = rows[-1].copy()
    samples = np.vstack(rows)
    samples[-1] = end
    samples.setflags(write=False)
    return TuplePath(samples, max_step)


@dataclass(frozen=True)
class RootTrajectory:
    """Root sets along t in [0, 1].

    ``root_sets[j + 1]`` is stored aligned with ``root_sets[j]``: its i-th
    element is the one matched to the i-th element of the previous set, so
    each storage slot traces one root. ``matchings[j]`` is the matching from
    ``root_sets[j]`` into the solver's raw output at ``ts[j + 1]``.
    """

    ts: tuple[float, ...]
    root_sets: tuple[RootMultiset, ...]
    matchings: tuple[tuple[int, ...], ...]
    step_dFs: tuple[float, ...]


class TrackingError(RuntimeError):
    """Step refinement hit the depth limit on ``interval``."""

    def __init__(self, message: str, interval: tuple[float, float]):
        super().__init__(f"{message} on [{interval[0]!r}, {interval[1]!r}]")
        self.interval = interval


def _interpolant(p: MonicPolynomial, q: MonicPolynomial, t: float) -> MonicPolynomial:
    if t == 0:
        return p
    if t == 1:
        return q
    return MonicPolynomial((1 - t) * p.coeffs + t * q.coeffs)


def track(
    p: MonicPolynomial,
    q: MonicPolynomial,
    steps: int = 16,
    max_depth: int = 20,
    noise_floor: float = 1e-9,
) -> RootTrajectory:
    """Follow the roots of (1 - t) p + t q on a grid of ``steps`` intervals.

    A step from t_a to t_b is accepted when its bottleneck root displacement
    is at most ``max(4 A d^(1/n), noise_floor)``, where d is the coefficient
    distance between the two interpolants and A is the Rahman-Schmeisser
    constant of the interpolant at t_a. Otherwise it is halved, down to
    ``max_depth`` levels, after which ``TrackingError`` is raised.
    """
    p, q = _poly(p), _poly(q)
    if p.degree != q.degree:
        raise ValueError("degree mismatch")
    if int(steps) != steps or steps < 1:
        raise ValueError("steps must be a positive integer")
    if p == q:
        steps = 1

    ts = [0.0]
    sets = [roots_of(p)]
    matchings: list[tuple[int, ...]] = []
    dfs: list[float] = []

    def advance(t_a: float, t_b: float, depth: int) -> None:
        f = _interpolant(p, q, t_a)
        g = _interpolant(p, q, t_b)
        raw = roots_of(g)
        m = multiset_metric(sets[-1], raw)
        threshold = max(rahman_schmeisser(f, g).bound, noise_floor)
        if m.value > threshold:
            if depth >= max_depth:
                raise TrackingError("refinement depth limit exceeded", (t_a, t_b))
            mid = 0.5 * (t_a + t_b)
            advance(t_a, mid, depth + 1)
            advance(mid, t_b, depth + 1)
            return
        ts.append(t_b)
        sets.append(RootMultiset(raw.elems[np.array(m.permutation)]))
        matchings.append(m.permutation)
        dfs.append(m.value)

    for j in range(steps):
        advance(j / steps, (j + 1) / steps, 0)
    return RootTrajectory(tuple(ts), tuple(sets), tuple(matchings), tuple(dfs))
