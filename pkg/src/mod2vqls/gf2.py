"""Bit-level linear algebra over the two-element field.

Vectors and matrix rows are packed into Python integers (entry 0 is the
most significant bit of the packed value), so XOR and parity reduce to
single int operations.  Everything here is immutable and pure; this module
is also the brute-force oracle the rest of the package is verified against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

# enumerate_solutions scans all 2**n candidates; this bounds the scan.
BRUTE_FORCE_LIMIT = 20


class CapacityError(ValueError):
    """Input exceeds a configured size limit."""


@dataclass(frozen=True)
class BitVector:
    """Immutable vector over GF(2), packed MSB-first into an int."""

    length: int
    value: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"length must be nonnegative, got {self.length}")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        bits = tuple(bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"entries must be 0 or 1, got {bits}")
        value = 0
        for b in bits:
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        return cls.from_bits(int(c) for c in text.strip())

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.length - 1 - j)) & 1 for j in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.value >> (self.length - 1 - j)) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.value ^ other.value)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class BitMatrix:
    """Immutable m x n matrix over GF(2); each row packed like a BitVector."""

    rows: int
    cols: int
    row_values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"dimensions must be nonnegative, got {self.rows}x{self.cols}")
        if len(self.row_values) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.row_values)}")
        bound = 1 << self.cols
        if any(not 0 <= r < bound for r in self.row_values):
            raise ValueError(f"row values must fit in {self.cols} bits")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        vecs = [BitVector.from_bits(r) for r in rows]
        if not vecs:
            return cls(0, 0, ())
        n = vecs[0].length
        if any(v.length != n for v in vecs):
            raise ValueError("rows have unequal lengths")
        return cls(len(vecs), n, tuple(v.value for v in vecs))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    def entry(self, i: int, j: int) -> int:
        """Entry a_ij with 0-based indices."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.row_values[i] >> (self.cols - 1 - j)) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_values[i])

    def nonzero_count(self) -> int:
        return sum(r.bit_count() for r in self.row_values)

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.rows))


def mat_vec_mod2(A: BitMatrix, x: BitVector) -> BitVector:
    """Product Ax over GF(2): entry i is the parity of sum_j a_ij x_j."""
    if x.length != A.cols:
        raise ValueError(f"dimension mismatch: matrix has {A.cols} cols, vector length {x.length}")
    value = 0
    for r in A.row_values:
        value = (value << 1) | ((r & x.value).bit_count() & 1)
    return BitVector(A.rows, value)


def rank_mod2(A: BitMatrix) -> int:
    """Rank over GF(2) by Gaussian elimination on packed rows."""
    rows = [r for r in A.row_values if r]
    rank = 0
    for j in range(A.cols):
        mask = 1 << (A.cols - 1 - j)
        pivot = next((k for k in range(rank, len(rows)) if rows[k] & mask), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k] & mask:
                rows[k] ^= rows[rank]
        rank += 1
    return rank


def enumerate_solutions(A: BitMatrix, b: BitVector) -> set[BitVector]:
    """All x with Ax == b, by scanning every candidate (cols <= BRUTE_FORCE_LIMIT)."""
    if b.length != A.rows:
        raise ValueError(f"dimension mismatch: matrix has {A.rows} rows, vector length {b.length}")
    if A.cols > BRUTE_FORCE_LIMIT:
        raise CapacityError(f"brute-force scan limited to {BRUTE_FORCE_LIMIT} cols, got {A.cols}")
    solutions = set()
    b_bits = b.bits
    for candidate in range(1 << A.cols):
        if all(((r & candidate).bit_count() & 1) == want for r, want in zip(A.row_values, b_bits)):
            solutions.add(BitVector(A.cols, candidate))
    return solutions


def random_consistent_system(
    n: int, rng: np.random.Generator
) -> tuple[BitMatrix, BitVector, BitVector]:
    """Draw a uniform n x n system with a planted solution: returns (A, b, x) with Ax = b."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    A = BitMatrix.from_rows(rng.integers(0, 2, size=(n, n)).tolist())
    x = BitVector.from_bits(rng.integers(0, 2, size=n).tolist())
    return A, mat_vec_mod2(A, x), x


def format_system(A: BitMatrix, b: BitVector) -> str:
    """Text form: "m n" header, m rows of bits, then b, all space-separated."""
    lines = [f"{A.rows} {A.cols}"]
    lines += [" ".join(str(bit) for bit in A.row(i)) for i in range(A.rows)]
    lines.append(" ".join(str(bit) for bit in b))
    return "\n".join(lines) + "\n"


def parse_system(text: str) -> tuple[BitMatrix, BitVector]:
    """Inverse of format_system; also accepts unseparated bit rows like "101"."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty system description")
    try:
        m, n = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line {lines[0]!r}, expected 'm n'") from exc
    if len(lines) != m + 2:
        raise ValueError(f"expected {m + 2} lines for a {m}x{n} system, got {len(lines)}")

    def read_bits(line: str, expect: int) -> list[int]:
        toks = line.split()
        if len(toks) == 1 and expect != 1:
            toks = list(toks[0])
        if len(toks) != expect:
            raise ValueError(f"expected {expect} bits in line {line!r}")
        return [int(t) for t in toks]

    A = BitMatrix.from_rows([read_bits(lines[1 + i], n) for i in range(m)])
    b = BitVector.from_bits(read_bits(lines[m + 1], m))
    return A, b


def load_system(path) -> tuple[BitMatrix, BitVector]:
    with open(path, encoding="ascii") as fh:
        return parse_system(fh.read())
