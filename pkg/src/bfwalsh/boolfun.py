"""Truth-table Boolean functions over GF(2^n) and GF(2^m) x GF(2^m).

A univariate table is indexed by the integer value of the element.  A
bivariate table over GF(2^m)^2 is indexed by ``x + 2^m * y``.  Because field
addition is XOR in both encodings, shifting a spectrum by a field element is
always ``index ^ shift``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import (
    IndicesNotDistinctError,
    ShapeMismatchError,
    SubfieldViolationError,
    TooLargeError,
)
from .gf2n import Field


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    table: np.ndarray
    field: Field
    bivariate: bool = False

    def __post_init__(self):
        t = np.ascontiguousarray(self.table, dtype=np.uint8) & 1
        if t.size != 1 << self.n_vars:
            raise ShapeMismatchError(f"table length {t.size} != 2^{self.n_vars}")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def n_vars(self) -> int:
        return 2 * self.field.n if self.bivariate else self.field.n

    @property
    def m(self) -> int | None:
        return self.field.n if self.bivariate else None

    def __eq__(self, other):
        return (
            isinstance(other, BooleanFunction)
            and self.n_vars == other.n_vars
            and self.bivariate == other.bivariate
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.n_vars, self.bivariate, self.table.tobytes()))

    def __xor__(self, other):
        return xor(self, other)

    def __and__(self, other):
        return and_(self, other)

    def __call__(self, idx):
        return int(self.table[idx])

    def _like(self, table) -> BooleanFunction:
        return BooleanFunction(table, self.field, self.bivariate)

    # --- export ------------------------------------------------------------
    def to_hex(self) -> str:
        return bits_to_hex(self.table)


def bits_to_hex(bits: np.ndarray) -> str:
    """Index 0 is the least significant bit of the first hex digit."""
    bits = np.asarray(bits, dtype=np.uint8)
    pad = (-bits.size) % 4
    b = np.concatenate([bits, np.zeros(pad, np.uint8)]).reshape(-1, 4)
    digits = b[:, 0] | (b[:, 1] << 1) | (b[:, 2] << 2) | (b[:, 3] << 3)
    return "".join("0123456789abcdef"[d] for d in digits)


def hex_to_bits(s: str, length: int) -> np.ndarray:
    d = np.array([int(c, 16) for c in s], dtype=np.uint8)
    bits = ((d[:, None] >> np.arange(4)) & 1).astype(np.uint8).reshape(-1)
    if bits.size < length:
        raise ShapeMismatchError("hex string too short")
    return bits[:length]


def from_hex(field: Field, s: str, bivariate: bool = False) -> BooleanFunction:
    n = 2 * field.n if bivariate else field.n
    return BooleanFunction(hex_to_bits(s, 1 << n), field, bivariate)


# --- builders ----------------------------------------------------------

def constant(field: Field, value: int = 0, bivariate: bool = False) -> BooleanFunction:
    n = 2 * field.n if bivariate else field.n
    return BooleanFunction(np.full(1 << n, value & 1, np.uint8), field, bivariate)


def from_values(field: Field, fn, bivariate: bool = False) -> BooleanFunction:
    """Evaluate a vectorised ``fn(x)`` (or ``fn(x, y)``) over the domain."""
    if bivariate:
        x, y = grid(field)
        return BooleanFunction(fn(x, y), field, True)
    return BooleanFunction(fn(field.elements()), field)


def grid(field: Field) -> tuple[np.ndarray, np.ndarray]:
    """Coordinate arrays (x, y) in bivariate index order."""
    q = field.order
    idx = np.arange(q * q, dtype=np.int64)
    return idx & (q - 1), idx >> field.n


def from_trace_monomial(field: Field, k: int, c: int, e: int) -> BooleanFunction:
    """x -> Tr_1^k(c x^e).  For k < n the argument must stay inside GF(2^k)."""
    x = field.elements()
    arg = field.mul(c, field.pow(x, e))
    if k == field.n:
        return BooleanFunction(field.trace_bit(arg), field)
    bad = ~field.in_subfield(k, arg)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise SubfieldViolationError(
            f"Tr_1^{k} argument {field.format(int(arg[i]))} at x={i} not in GF(2^{k})"
        )
    return BooleanFunction(field.subtrace_bit(k, arg), field)


def linear(field: Field, c: int) -> BooleanFunction:
    """x -> Tr_1^n(c x)."""
    return BooleanFunction(field.trace_bit(field.mul(c, field.elements())), field)


def bivariate_linear(field: Field, c1: int, c2: int) -> BooleanFunction:
    """(x, y) -> Tr_1^m(c1 x + c2 y)."""
    q = field.order
    tx = field.trace_bit(field.mul(c1, field.elements()))
    ty = field.trace_bit(field.mul(c2, field.elements()))
    return BooleanFunction((ty[:, None] ^ tx[None, :]).reshape(q * q), field, True)


# --- pointwise ops -----------------------------------------------------

def _check(f: BooleanFunction, g: BooleanFunction):
    if f.n_vars != g.n_vars or f.bivariate != g.bivariate:
        raise ShapeMismatchError(f"{f.n_vars} vs {g.n_vars} variables")


def xor(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    _check(f, g)
    return f._like(f.table ^ g.table)


def and_(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    _check(f, g)
    return f._like(f.table & g.table)


def weight(f: BooleanFunction) -> int:
    return int(f.table.sum(dtype=np.int64))


def is_balanced(f: BooleanFunction) -> bool:
    return 2 * weight(f) == f.table.size


# --- ANF / degree --------------------------------------------------------

def mobius(bits: np.ndarray) -> np.ndarray:
    """Binary Moebius transform; its own inverse."""
    a = np.array(bits, dtype=np.uint8)
    n = a.size.bit_length() - 1
    if a.size != 1 << n:
        raise ShapeMismatchError("length is not a power of two")
    if n > 26:
        raise TooLargeError(f"{n} variables")
    for i in range(n):
        v = a.reshape(-1, 2, 1 << i)
        v[:, 1, :] ^= v[:, 0, :]
    return a


def anf(f: BooleanFunction) -> np.ndarray:
    """ANF coefficients; entry at mask M is the coefficient of prod_{i in M} x_i."""
    return mobius(f.table)


def algebraic_degree(f: BooleanFunction) -> int:
    coeffs = anf(f)
    masks = np.flatnonzero(coeffs)
    if masks.size == 0:
        return 0
    return int(np.bitwise_count(masks.astype(np.uint64)).max())


def cubic_symmetric_sum(field: Field, u: int, v: int, r: int, i: int, j: int, k: int) -> int:
    """Sum over permutations (a, b, c) of (i, j, k) of u^(2^a) v^(2^b) r^(2^c).

    This is the coefficient of x^(2^i + 2^j + 2^k) contributed by the triple
    product Tr(ux) Tr(vx) Tr(rx).
    """
    if len({i, j, k}) != 3 or not all(0 <= t < field.n for t in (i, j, k)):
        raise IndicesNotDistinctError(f"({i}, {j}, {k})")
    total = 0
    for a, b, c in permutations((i, j, k)):
        term = field.mul(field.mul(field.frobenius(u, a), field.frobenius(v, b)),
                         field.frobenius(r, c))
        total ^= term
    return total
