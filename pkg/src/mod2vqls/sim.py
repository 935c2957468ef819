"""Dense statevector simulator for the X / H / RY / CNOT / CZ gate set.

Qubits are numbered 1..q and qubit 1 is the most significant bit of a
printed bitstring, so ket labels read left to right.  Amplitudes live in a
complex128 array of length 2**q; gates act on reshaped views, one axis per
qubit.  States are never renormalized behind the caller's back: norm drift
beyond NORM_DRIFT_LIMIT raises SimulationError instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .gf2 import BitVector, CapacityError

if TYPE_CHECKING:
    from .circuits import Circuit

MAX_QUBITS = 24
NORM_DRIFT_LIMIT = 1e-9

GATE_NAMES = ("X", "H", "RY", "CNOT", "CZ")
_SQRT1_2 = 1.0 / math.sqrt(2.0)


class SimulationError(RuntimeError):
    """Internal consistency failure (e.g. statevector norm drift)."""


@dataclass(frozen=True)
class Gate:
    """One gate instance: name, 1-based qubit indices, optional RY angle."""

    name: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self) -> None:
        if self.name not in GATE_NAMES:
            raise ValueError(f"unknown gate {self.name!r}")
        if any(q < 1 for q in self.qubits):
            raise ValueError(f"qubit indices are 1-based, got {self.qubits}")
        if len(self.qubits) == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError(f"{self.name} needs two distinct qubits, got {self.qubits}")
        if self.name == "RY":
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError(f"RY needs a finite angle, got {self.angle}")
        elif self.angle is not None:
            raise ValueError(f"{self.name} takes no angle")

    def __str__(self) -> str:
        qubits = " ".join(str(q) for q in self.qubits)
        if self.name == "RY":
            return f"RY {qubits} {self.angle:.6f}"
        return f"{self.name} {qubits}"


def X(target: int) -> Gate:
    return Gate("X", (target,))


def H(target: int) -> Gate:
    return Gate("H", (target,))


def RY(target: int, angle: float) -> Gate:
    return Gate("RY", (target,), float(angle))


def CNOT(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


def CZ(a: int, b: int) -> Gate:
    return Gate("CZ", (a, b))


@dataclass(frozen=True)
class StateVector:
    """State of num_qubits qubits; amplitudes[k] belongs to bitstring format(k, '0qb')."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.num_qubits <= MAX_QUBITS:
            raise CapacityError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.num_qubits}")
        if self.amplitudes.shape != (1 << self.num_qubits,):
            raise ValueError(
                f"need {1 << self.num_qubits} amplitudes, got shape {self.amplitudes.shape}"
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def bitstring(self, index: int) -> str:
        return format(index, f"0{self.num_qubits}b")


def zero_state(num_qubits: int) -> StateVector:
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def basis_state(bits: BitVector, num_qubits: int | None = None) -> StateVector:
    """|bits> as a statevector, optionally padded with trailing |0> qubits."""
    q = bits.length if num_qubits is None else num_qubits
    if q < bits.length:
        raise ValueError(f"{bits.length} bits do not fit in {q} qubits")
    amps = np.zeros(1 << q, dtype=np.complex128)
    amps[bits.value << (q - bits.length)] = 1.0
    return StateVector(q, amps)


def _check_indices(gate: Gate, num_qubits: int) -> None:
    if any(q > num_qubits for q in gate.qubits):
        raise ValueError(f"gate {gate} out of range for {num_qubits} qubits")


def _apply_inplace(tensor: np.ndarray, gate: Gate, num_qubits: int) -> None:
    """Apply gate to the [2]*q view of the amplitude array. Qubit k is axis k-1."""
    axes = tuple(q - 1 for q in gate.qubits)

    def idx(*bits: int) -> tuple:
        out: list = [slice(None)] * num_qubits
        for axis, bit in zip(axes, bits):
            out[axis] = bit
        return tuple(out)

    if gate.name == "X":
        lo, hi = idx(0), idx(1)
        tmp = tensor[lo].copy()
        tensor[lo] = tensor[hi]
        tensor[hi] = tmp
    elif gate.name == "H":
        lo, hi = idx(0), idx(1)
        a0 = tensor[lo].copy()
        a1 = tensor[hi]
        tensor[lo] = (a0 + a1) * _SQRT1_2
        tensor[hi] = (a0 - a1) * _SQRT1_2
    elif gate.name == "RY":
        c, s = math.cos(gate.angle / 2.0), math.sin(gate.angle / 2.0)
        lo, hi = idx(0), idx(1)
        a0 = tensor[lo].copy()
        a1 = tensor[hi]
        tensor[lo] = c * a0 - s * a1
        tensor[hi] = s * a0 + c * a1
    elif gate.name == "CNOT":
        lo, hi = idx(1, 0), idx(1, 1)
        tmp = tensor[lo].copy()
        tensor[lo] = tensor[hi]
        tensor[hi] = tmp
    elif gate.name == "CZ":
        tensor[idx(1, 1)] *= -1.0
    else:  # unreachable; Gate validates names
        raise ValueError(f"unknown gate {gate.name!r}")


def _check_norm(amps: np.ndarray) -> None:
    drift = abs(float(np.linalg.norm(amps)) - 1.0)
    if drift > NORM_DRIFT_LIMIT:
        raise SimulationError(f"statevector norm drifted by {drift:.3e}")


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Gate's unitary applied on the designated qubit(s); returns a new state."""
    _check_indices(gate, state.num_qubits)
    amps = state.amplitudes.copy()
    _apply_inplace(amps.reshape([2] * state.num_qubits), gate, state.num_qubits)
    _check_norm(amps)
    return StateVector(state.num_qubits, amps)


def run_circuit(state: StateVector, circuit: "Circuit") -> StateVector:
    """Apply circuit gates in list order; single norm check at the end."""
    if circuit.num_qubits != state.num_qubits:
        raise ValueError(
            f"circuit has {circuit.num_qubits} qubits, state has {state.num_qubits}"
        )
    amps = state.amplitudes.copy()
    tensor = amps.reshape([2] * state.num_qubits)
    for gate in circuit.gates:
        _apply_inplace(tensor, gate, state.num_qubits)
    _check_norm(amps)
    return StateVector(state.num_qubits, amps)


def marginal_probability(
    state: StateVector, register: Sequence[int], bits: BitVector
) -> float:
    """Probability that measuring `register` (1-based qubits) yields `bits`."""
    if len(set(register)) != len(register):
        raise ValueError(f"register indices must be distinct, got {register}")
    if any(not 1 <= q <= state.num_qubits for q in register):
        raise ValueError(f"register {register} out of range for {state.num_qubits} qubits")
    if bits.length != len(register):
        raise ValueError(f"register has {len(register)} qubits but bits has length {bits.length}")
    idx: list = [slice(None)] * state.num_qubits
    for q, bit in zip(register, bits):
        idx[q - 1] = bit
    sub = state.amplitudes.reshape([2] * state.num_qubits)[tuple(idx)]
    return float(np.sum(np.abs(sub) ** 2))


def sample(state: StateVector, shots: int, rng: np.random.Generator) -> dict[str, int]:
    """Histogram of `shots` measurement outcomes in the |amplitude|^2 distribution."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = state.probabilities()
    probs = probs / probs.sum()
    outcomes = rng.choice(probs.size, size=shots, p=probs)
    values, counts = np.unique(outcomes, return_counts=True)
    return {state.bitstring(int(v)): int(c) for v, c in zip(values, counts)}


def support(state: StateVector, cutoff: float) -> set[str]:
    """Bitstrings whose measurement probability is at least `cutoff`."""
    if not 0.0 < cutoff < 1.0:
        raise ValueError(f"cutoff must be in (0, 1), got {cutoff}")
    probs = state.probabilities()
    return {state.bitstring(int(k)) for k in np.nonzero(probs >= cutoff)[0]}
