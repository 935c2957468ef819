"""Builders that compile GF(2) systems and ansatze into gate lists.

The central construction maps a bit matrix A to a CNOT circuit on n+m
qubits that sends |x>|0> to |x>|Ax>: one CNOT(j, n+i) per nonzero a_ij.
Qubits 1..n are the input register, n+1..n+m the output register.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import BitMatrix, BitVector
from .sim import CNOT, CZ, RY, X, Gate


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over a fixed number of qubits."""

    num_qubits: int
    gates: tuple[Gate, ...]

    def __post_init__(self) -> None:
        if self.num_qubits < 0:
            raise ValueError(f"num_qubits must be nonnegative, got {self.num_qubits}")
        for gate in self.gates:
            if any(q > self.num_qubits for q in gate.qubits):
                raise ValueError(f"gate {gate} out of range for {self.num_qubits} qubits")

    def gate_count(self) -> int:
        return len(self.gates)

    def __len__(self) -> int:
        return len(self.gates)


def format_circuit(circuit: Circuit) -> str:
    """Debug serialization, one gate per line (e.g. "CNOT 1 4", "RY 2 1.570796")."""
    return "".join(f"{gate}\n" for gate in circuit.gates)


def build_matvec_operator(A: BitMatrix) -> Circuit:
    """CNOT circuit computing |x>|0> -> |x>|Ax> on A.cols + A.rows qubits.

    Gates are emitted column by column (all CNOTs commute, so the order is
    a convention, not a correctness requirement); the count equals the
    number of nonzero entries of A.
    """
    n, m = A.cols, A.rows
    gates = [
        CNOT(j + 1, n + i + 1)
        for j in range(n)
        for i in range(m)
        if A.entry(i, j)
    ]
    return Circuit(n + m, tuple(gates))


def build_state_prep(x: BitVector, total_qubits: int) -> Circuit:
    """X gates switching qubits 1..len(x) to the bits of x."""
    if x.length > total_qubits:
        raise ValueError(f"{x.length} bits do not fit in {total_qubits} qubits")
    return Circuit(total_qubits, tuple(X(j + 1) for j, bit in enumerate(x) if bit))


def build_rotations_ansatz(theta: Sequence[float]) -> Circuit:
    """One Y-rotation per qubit: RY(1, theta_1) ... RY(n, theta_n)."""
    return Circuit(len(theta), tuple(RY(j + 1, t) for j, t in enumerate(theta)))


def brickwork_bricks(n_qubits: int, layers: int) -> list[list[tuple[int, int]]]:
    """Qubit pairs per layer; odd layers pair (1,2),(3,4),..., even layers (2,3),(4,5),..."""
    if n_qubits < 0 or layers < 0:
        raise ValueError(f"need nonnegative sizes, got {n_qubits} qubits, {layers} layers")
    return [
        [(a, a + 1) for a in range(1 if layer % 2 == 1 else 2, n_qubits, 2)]
        for layer in range(1, layers + 1)
    ]


def brickwork_param_count(n_qubits: int, layers: int) -> int:
    """Two RY angles per brick."""
    return 2 * sum(len(layer) for layer in brickwork_bricks(n_qubits, layers))


def build_brickwork_ansatz(
    n_qubits: int, layers: int, params: Sequence[float]
) -> Circuit:
    """Alternating-offset layers of {RY, RY, CZ} bricks on n_qubits qubits.

    Parameters are consumed layer by layer, brick by brick, lower qubit
    first; each layer's bricks tile disjoint adjacent pairs.
    """
    expected = brickwork_param_count(n_qubits, layers)
    if len(params) != expected:
        raise ValueError(
            f"brickwork on {n_qubits} qubits with {layers} layers needs "
            f"{expected} parameters, got {len(params)}"
        )
    gates: list[Gate] = []
    offset = 0
    for layer in brickwork_bricks(n_qubits, layers):
        for a, b in layer:
            gates.append(RY(a, params[offset]))
            gates.append(RY(b, params[offset + 1]))
            gates.append(CZ(a, b))
            offset += 2
    return Circuit(n_qubits, tuple(gates))


def build_full_variational_circuit(A: BitMatrix, ansatz: Circuit) -> Circuit:
    """Ansatz on the input register followed by the matvec operator."""
    if ansatz.num_qubits != A.cols:
        raise ValueError(
            f"ansatz acts on {ansatz.num_qubits} qubits but the matrix has {A.cols} cols"
        )
    matvec = build_matvec_operator(A)
    return Circuit(matvec.num_qubits, ansatz.gates + matvec.gates)


def build_adder_demo(theta: float, phi: float) -> Circuit:
    """Three-qubit adder: CNOTs fold two rotated qubits into a target.

    The RY angles are doubled so that P(target = 1) comes out as
    sin^2(theta) cos^2(phi) + cos^2(theta) sin^2(phi) in the given angles.
    """
    return Circuit(
        3,
        (RY(1, 2.0 * theta), RY(2, 2.0 * phi), CNOT(1, 3), CNOT(2, 3)),
    )
