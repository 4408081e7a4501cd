"""Coefficients to roots: Aberth-Ehrlich simultaneous iteration.

All n roots are refined together. Starting points sit on a circle inside
the Cauchy disk, so no start lies outside the region that holds the roots.
Iteration cost is O(n^2) per sweep; degrees up to about 500 are practical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MonicPolynomial, RootMultiset, _poly

__all__ = [
    "SolverConfig",
    "SolveReport",
    "ConvergenceError",
    "cauchy_bound",
    "solve",
    "roots_of",
]


@dataclass(frozen=True)
class SolverConfig:
    max_iterations: int = 200
    residual_tolerance: float = 1e-12
    step_tolerance: float = 1e-13
    initial_radius_factor: float = 0.9

    def __post_init__(self):
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise ValueError("max_iterations must be a positive integer")
        if not self.residual_tolerance > 0:
            raise ValueError("residual_tolerance must be positive")
        if not self.step_tolerance > 0:
            raise ValueError("step_tolerance must be positive")
        if not 0 < self.initial_radius_factor <= 1:
            raise ValueError("initial_radius_factor must lie in (0, 1]")


@dataclass(frozen=True)
class SolveReport:
    roots: RootMultiset
    iterations: int
    max_residual: float
    converged: bool


class ConvergenceError(RuntimeError):
    """Raised by :func:`roots_of` when the iteration did not converge."""

    def __init__(self, message: str, report: SolveReport):
        super().__init__(message)
        self.report = report


def cauchy_bound(p: MonicPolynomial) -> float:
    """1 + max|a_j|; every root has strictly smaller modulus."""
    p = _poly(p)
    return 1.0 + float(np.max(np.abs(p.coeffs)))


def _horner_with_derivative(full: np.ndarray, z: np.ndarray):
    val = np.full_like(z, full[0])
    der = np.zeros_like(z)
    for c in full[1:]:
        der = der * z + val
        val = val * z + c
    return val, der


def _scaled_residual(p: MonicPolynomial, z: np.ndarray, scale: float) -> float:
    """max |p(z)| / scale^n, evaluated as a polynomial in z/scale to avoid overflow."""
    n = p.degree
    powers = scale ** (np.arange(n, dtype=float) - n)
    scaled = np.concatenate(([1.0 + 0j], (p.coeffs * powers)[::-1]))
    w = z / scale
    val = np.full_like(w, scaled[0])
    for c in scaled[1:]:
        val = val * w + c
    return float(np.max(np.abs(val)))


def solve(p: MonicPolynomial, cfg: SolverConfig | None = None) -> SolveReport:
    """Approximate all roots of ``p``.

    Stops once the largest Aberth correction is below
    ``step_tolerance * (1 + cauchy_bound)`` and the scaled residual
    ``max|p(z)| / cauchy_bound^n`` is below ``residual_tolerance``. If that
    never happens within ``max_iterations`` the iterate with the smallest
    residual is returned with ``converged=False``.

    Clustered or multiple roots come back as nearby simple roots; an m-fold
    root is typically accurate only to about eps^(1/m).
    """
    p = _poly(p)
    cfg = cfg or SolverConfig()
    n = p.degree
    full = p.full_coeffs()
    bound = cauchy_bound(p)
    step_tol = cfg.step_tolerance * (1.0 + bound)

    angles = 2.0 * np.pi * np.arange(n) / n + np.pi / (2 * n)
    z = cfg.initial_radius_factor * bound * np.exp(1j * angles)

    best_z = z.copy()
    best_res = _scaled_residual(p, z, bound)
    converged = False
    iterations = 0
    off_diagonal = ~np.eye(n, dtype=bool)
    for iterations in range(1, cfg.max_iterations + 1):
        val, der = _horner_with_derivative(full, z)
        diff = z[:, None] - z[None, :]
        # coincident iterates contribute nothing instead of dividing by zero
        usable = off_diagonal & (diff != 0)
        inv = np.zeros_like(diff)
        inv[usable] = 1.0 / diff[usable]
        repulsion = inv.sum(axis=1)
        denom = der - val * repulsion
        step = np.zeros_like(z)
        ok = denom != 0
        step[ok] = val[ok] / denom[ok]
        # a vanishing denominator away from a root: nudge off the critical point
        stuck = ~ok & (val != 0)
        step[stuck] = step_tol * (1 + 1j) * (1.0 + np.abs(z[stuck]))
        z = z - step

        res = _scaled_residual(p, z, bound)
        if res <= best_res:
            best_res, best_z = res, z.copy()
        if float(np.max(np.abs(step))) <= step_tol and res <= cfg.residual_tolerance:
            best_z, best_res = z, res
            converged = True
            break

    return SolveReport(RootMultiset(best_z), iterations, best_res, converged)


def roots_of(p: MonicPolynomial, cfg: SolverConfig | None = None) -> RootMultiset:
    """Root multiset of ``p`` (default solver settings unless ``cfg`` is given)."""
    report = solve(p, cfg)
    if not report.converged:
        raise ConvergenceError("solver did not converge", report)
    return report.roots
