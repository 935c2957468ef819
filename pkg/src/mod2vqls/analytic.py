"""Closed-form cost, gradient, and q-integer identities for the rotations ansatz.

With per-qubit Y-rotations the prepared amplitudes factor into products of
half-angle cosines and sines, so the cost, its gradient, and its values at
root-of-unity parameter points all have exact formulas.  These serve as
independent oracles for the simulator path (which never sees this module).
Formulas exist for the rotations ansatz only; brickwork costs always go
through the simulator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circuits import brickwork_param_count
from .gf2 import BitMatrix, BitVector, enumerate_solutions, rank_mod2

ANSATZ_KINDS = ("rotations", "brickwork")

# RY has period 4*pi; angles are folded into [0, 4*pi) before formula use.
_PERIOD = 4.0 * math.pi


@dataclass(frozen=True)
class AnsatzParams:
    """Parameter vector plus ansatz kind ('rotations' or 'brickwork')."""

    theta: tuple[float, ...]
    kind: str = "rotations"
    layers: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ANSATZ_KINDS:
            raise ValueError(f"unknown ansatz kind {self.kind!r}")
        if any(not math.isfinite(t) for t in self.theta):
            raise ValueError("parameters must be finite")
        if self.kind == "brickwork":
            if self.layers is None or self.layers < 0:
                raise ValueError(f"brickwork needs a layer count, got {self.layers}")
        elif self.layers is not None:
            raise ValueError("layers only applies to the brickwork ansatz")

    def validate_for(self, n_qubits: int) -> None:
        """Check the parameter count against a system with n_qubits columns."""
        if self.kind == "rotations":
            expected = n_qubits
        else:
            expected = brickwork_param_count(n_qubits, self.layers)
        if len(self.theta) != expected:
            raise ValueError(
                f"{self.kind} ansatz on {n_qubits} qubits needs {expected} "
                f"parameters, got {len(self.theta)}"
            )


def _canonical(theta: Sequence[float]) -> np.ndarray:
    arr = np.asarray(theta, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("angles must be finite")
    return np.remainder(arr, _PERIOD)


def alpha(x: BitVector, theta: Sequence[float]) -> float:
    """Amplitude of |x> under the rotations ansatz: prod cos(t_j/2)^(1-x_j) sin(t_j/2)^x_j."""
    if x.length != len(theta):
        raise ValueError(f"vector length {x.length} != {len(theta)} angles")
    half = _canonical(theta) / 2.0
    trig = np.where(np.fromiter(x, dtype=bool, count=x.length), np.sin(half), np.cos(half))
    return float(np.prod(trig))


def analytic_cost(A: BitMatrix, b: BitVector, theta: Sequence[float]) -> float:
    """Cost 1 - sum of alpha(x)^2 over the solution set of Ax = b."""
    if len(theta) != A.cols:
        raise ValueError(f"{len(theta)} angles for a matrix with {A.cols} cols")
    solutions = enumerate_solutions(A, b)
    return 1.0 - sum(alpha(x, theta) ** 2 for x in solutions)


def analytic_gradient(A: BitMatrix, b: BitVector, theta: Sequence[float]) -> np.ndarray:
    """Gradient of the cost: entry j is sum over solutions of (-1)^x_j alpha_x alpha_(x xor e_j).

    Differentiating alpha_x in theta_j swaps the j-th cosine for a sine (or
    vice versa) and contributes a half factor with a sign fixed by x_j; the
    chain rule through 1 - sum alpha^2 yields the (-1)^x_j sign used here.
    """
    if len(theta) != A.cols:
        raise ValueError(f"{len(theta)} angles for a matrix with {A.cols} cols")
    n = A.cols
    solutions = enumerate_solutions(A, b)
    grad = np.zeros(n)
    for x in solutions:
        a_x = alpha(x, theta)
        for j in range(n):
            flipped = x ^ BitVector(n, 1 << (n - 1 - j))
            sign = -1.0 if x[j] else 1.0
            grad[j] += sign * a_x * alpha(flipped, theta)
    return grad


def q_integer(k: int, q: complex) -> complex:
    """Quantum integer [k]_q = (q^k - q^-k)/(q - q^-1) for q outside {0, 1, -1}.

    Near q = +-1 the defining ratio degenerates to 0/0, so the equivalent
    Laurent sum q^(k-1) + q^(k-3) + ... + q^(1-k) is used there instead.
    """
    q = complex(q)
    if q in (0j, 1 + 0j, -1 + 0j):
        raise ValueError(f"q must avoid 0 and +-1, got {q}")
    denom = q - 1.0 / q
    if abs(denom) < 1e-8:
        sign = -1.0 if k < 0 else 1.0
        return sign * sum(q ** (abs(k) - 1 - 2 * t) for t in range(abs(k)))
    return (q**k - q**-k) / denom


def q_integer_amplitude(x_j: int, p_j: int, n: int) -> float:
    """Rotation amplitude at theta_j = (pi/2n) p_j, expressed through q-integers.

    Returns [2n(1-x_j) + p_j]_xi / [2n]_xi with xi = exp(i pi / 4n), which
    equals cos(theta_j/2) for x_j = 0 and sin(theta_j/2) for x_j = 1.
    """
    if x_j not in (0, 1):
        raise ValueError(f"x_j must be a bit, got {x_j}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= p_j < 4 * n:
        raise ValueError(f"p_j must lie in 0..{4 * n - 1}, got {p_j}")
    xi = complex(math.cos(math.pi / (4 * n)), math.sin(math.pi / (4 * n)))
    ratio = q_integer(2 * n * (1 - x_j) + p_j, xi) / q_integer(2 * n, xi)
    if abs(ratio.imag) > 1e-12:
        raise ArithmeticError(f"ratio should be real, got imaginary part {ratio.imag:.3e}")
    return ratio.real


def predicted_plateau_cost(A: BitMatrix) -> float:
    """Cost value 1 - 2^-rank(A) taken on the all-angles-equal odd plateau."""
    return 1.0 - 2.0 ** (-rank_mod2(A))
