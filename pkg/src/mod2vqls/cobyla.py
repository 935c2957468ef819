"""Derivative-free trust-region minimizer with linear interpolation models.

A simplex of d+1 points supports a linear model of the objective; each
iteration either takes a steepest-descent step of the trust-region radius,
repairs the simplex geometry, or contracts the radius when an acceptable
simplex stops producing progress.  This is the unconstrained core of
Powell's linear-approximation scheme; every objective evaluation is
counted, and the run is deterministic for a fixed starting point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

# Simplex acceptability: vertex offsets from the pole must stay within
# BETA * rho while keeping perpendicular extents above ALPHA * rho.
ALPHA = 0.25
BETA = 2.1
GAMMA = 0.5


@dataclass
class MinimizeResult:
    x: np.ndarray
    fun: float
    nfev: int
    status: str  # 'ftarget' | 'radius' | 'maxfun'


class _Budget(Exception):
    pass


class _Target(Exception):
    pass


def minimize(
    fun: Callable[[np.ndarray], float],
    x0: Sequence[float],
    *,
    rhobeg: float = 1.0,
    rhoend: float = 1e-4,
    maxfun: int = 500,
    ftarget: float = -math.inf,
) -> MinimizeResult:
    if not 0.0 < rhoend < rhobeg:
        raise ValueError(f"need 0 < rhoend < rhobeg, got {rhoend}, {rhobeg}")
    if maxfun < 1:
        raise ValueError(f"maxfun must be >= 1, got {maxfun}")

    x0 = np.asarray(x0, dtype=float)
    nfev = 0
    best_x = x0.copy()
    best_f = math.inf

    def ev(x: np.ndarray) -> float:
        nonlocal nfev, best_x, best_f
        f = float(fun(x))
        nfev += 1
        if f < best_f:
            best_f, best_x = f, x.copy()
        if f <= ftarget:
            raise _Target
        if nfev >= maxfun:
            raise _Budget
        return f

    status = "radius"
    try:
        if x0.size == 0:
            ev(x0)
        else:
            _iterate(ev, x0, rhobeg, rhoend)
    except _Target:
        status = "ftarget"
    except _Budget:
        status = "maxfun"
    return MinimizeResult(best_x, best_f, nfev, status)


def _iterate(ev, x0: np.ndarray, rhobeg: float, rhoend: float) -> None:
    d = x0.size
    simplex = np.tile(x0, (d + 1, 1))
    fval = np.empty(d + 1)
    fval[0] = ev(simplex[0])
    for j in range(d):
        simplex[1 + j, j] += rhobeg
        fval[1 + j] = ev(simplex[1 + j])

    rho = rhobeg
    while True:
        pole = int(np.argmin(fval))
        if pole != 0:
            simplex[[0, pole]] = simplex[[pole, 0]]
            fval[[0, pole]] = fval[[pole, 0]]

        disp = simplex[1:] - simplex[0]
        try:
            inv = np.linalg.inv(disp)
        except np.linalg.LinAlgError:
            # Degenerate simplex: rebuild it as a fresh axis-aligned one.
            for j in range(d):
                simplex[1 + j] = simplex[0]
                simplex[1 + j, j] += rho
                fval[1 + j] = ev(simplex[1 + j])
            continue
        grad = inv @ (fval[1:] - fval[0])

        offsets = np.linalg.norm(disp, axis=1)
        extents = 1.0 / np.linalg.norm(inv, axis=0)
        if np.any(offsets > BETA * rho) or np.any(extents < ALPHA * rho):
            far = int(np.argmax(offsets))
            j = far if offsets[far] > BETA * rho else int(np.argmin(extents))
            direction = inv[:, j] / np.linalg.norm(inv[:, j])
            if float(grad @ direction) > 0.0:
                direction = -direction
            simplex[1 + j] = simplex[0] + GAMMA * rho * direction
            fval[1 + j] = ev(simplex[1 + j])
            continue

        gnorm = float(np.linalg.norm(grad))
        predicted = rho * gnorm
        if predicted <= 1e-14:
            # Model is flat at this scale; contract or finish.
            if rho <= rhoend:
                return
            rho = rhoend if rho <= 3.0 * rhoend else 0.5 * rho
            continue

        step = -(rho / gnorm) * grad
        f_new = ev(simplex[0] + step)
        actual = fval[0] - f_new

        # Replacing vertex j rescales the simplex volume by |coeff_j|; pick
        # the vertex that keeps the simplex fat, and only swap the new point
        # in when it improves that vertex or clearly improves the geometry.
        coeff = inv.T @ step
        j = int(np.argmax(np.abs(coeff)))
        if f_new < fval[1 + j] or abs(coeff[j]) >= 1.1:
            simplex[1 + j] = simplex[0] + step
            fval[1 + j] = f_new

        if actual <= 0.1 * predicted:
            within = np.linalg.norm(simplex[1:] - simplex[0], axis=1) <= BETA * rho
            if bool(np.all(within)):
                # No progress from an acceptable simplex: the radius is done.
                if rho <= rhoend:
                    return
                rho = rhoend if rho <= 3.0 * rhoend else 0.5 * rho
            # Otherwise loop back; the geometry branch will tighten first.
