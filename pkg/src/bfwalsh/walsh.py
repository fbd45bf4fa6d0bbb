"""Exact Walsh spectra, spectral classes and bent duals."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .boolfun import BooleanFunction
from .errors import NotBentError, TooLargeError
from .gf2n import Field

MAX_FWHT_VARS = 24

# When set, every WalshSpectrum built by fwht() is checked against Parseval.
CHECK_PARSEVAL = False
parseval_checks = 0


class Tag(str, enum.Enum):
    BENT = "Bent"
    SEMI_BENT = "SemiBent"
    FIVE_VALUED = "FiveValued"
    PLATEAUED = "Plateaued"
    OTHER = "Other"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SpectrumClass:
    tag: Tag
    witness: tuple[int, ...]
    amplitude: int | None = None

    def __str__(self):
        if self.tag is Tag.PLATEAUED:
            return f"Plateaued({self.amplitude})"
        return str(self.tag)


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    values: np.ndarray
    field: Field
    bivariate: bool = False

    def __post_init__(self):
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return 2 * self.field.n if self.bivariate else self.field.n

    @property
    def distribution(self) -> dict[int, int]:
        return distribution(self)

    def __getitem__(self, a):
        return int(self.values[a])

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "distribution": {str(k): v for k, v in sorted(self.distribution.items(), reverse=True)},
                "class": str(classify(self)),
            },
            sort_keys=True,
        )

    def to_bytes(self) -> bytes:
        """Full vector as little-endian signed 32-bit integers."""
        return self.values.astype("<i4").tobytes()


@lru_cache(maxsize=None)
def _dual_basis_index(field: Field) -> np.ndarray:
    """L(a) with bit i = Tr(a * x^i), so Tr(a z) = <L(a), bits(z)>."""
    a = field.elements()
    idx = np.zeros(field.order, dtype=np.int64)
    for i in range(field.n):
        idx |= field.trace_bit(field.mul(a, 1 << i)).astype(np.int64) << i
    idx.setflags(write=False)
    return idx


def hadamard(signs: np.ndarray) -> np.ndarray:
    """In-place-style butterfly on a +-1 (or any integer) vector."""
    a = np.array(signs, dtype=np.int64)
    n = a.size.bit_length() - 1
    for i in range(n):
        v = a.reshape(-1, 2, 1 << i)
        x = v[:, 0, :].copy()
        v[:, 0, :] += v[:, 1, :]
        v[:, 1, :] = x - v[:, 1, :]
    return a


def fwht(f: BooleanFunction) -> WalshSpectrum:
    """chi_f(a) = sum_x (-1)^(f(x) + Tr(a x)) for every a, exactly."""
    if f.n_vars > MAX_FWHT_VARS:
        raise TooLargeError(f"{f.n_vars} variables > {MAX_FWHT_VARS}")
    w = hadamard(1 - 2 * f.table.astype(np.int64))
    lmap = _dual_basis_index(f.field)
    if f.bivariate:
        q = f.field.order
        a = np.arange(q * q, dtype=np.int64)
        perm = lmap[a & (q - 1)] | (lmap[a >> f.field.n] << f.field.n)
    else:
        perm = lmap
    s = WalshSpectrum(w[perm], f.field, f.bivariate)
    if CHECK_PARSEVAL:
        global parseval_checks
        if not parseval_ok(s):
            raise AssertionError("Parseval identity violated")
        parseval_checks += 1
    return s


def naive_walsh(f: BooleanFunction, a: int) -> int:
    """Direct O(2^n) summation at one point, with the trace taken as a Frobenius sum."""
    fld = f.field
    if f.bivariate:
        q = fld.order
        a1, a2 = a & (q - 1), a >> fld.n
        idx = np.arange(q * q, dtype=np.int64)
        x, y = idx & (q - 1), idx >> fld.n
        lin = fld.mul(a1, x) ^ fld.mul(a2, y)
    else:
        lin = fld.mul(a, fld.elements())
    tr = fld.trace(1, lin) & 1
    return int((1 - 2 * (f.table.astype(np.int64) ^ tr)).sum())


def distribution(s: WalshSpectrum) -> dict[int, int]:
    vals, counts = np.unique(s.values, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


def semi_bent_amplitude(n: int) -> int:
    return 1 << ((n + 1) // 2 if n % 2 else n // 2 + 1)


def classify(s: WalshSpectrum) -> SpectrumClass:
    return classify_values(np.unique(s.values), s.n)


def classify_values(values, n: int) -> SpectrumClass:
    """Classify the set of distinct spectral values of an n-variable function."""
    vals = set(int(v) for v in values)
    witness = tuple(sorted(vals))
    if n % 2 == 0:
        b = 1 << (n // 2)
        if vals <= {b, -b}:
            return SpectrumClass(Tag.BENT, witness)
        if vals == {0, b, -b, 2 * b, -2 * b}:
            return SpectrumClass(Tag.FIVE_VALUED, witness)
    sb = semi_bent_amplitude(n)
    if vals <= {0, sb, -sb} and 0 in vals and len(vals) > 1:
        return SpectrumClass(Tag.SEMI_BENT, witness, sb)
    nz = vals - {0}
    if len(vals) == 3 and 0 in vals:
        amp = max(nz)
        if nz == {amp, -amp} and amp & (amp - 1) == 0:
            return SpectrumClass(Tag.PLATEAUED, witness, amp)
    return SpectrumClass(Tag.OTHER, witness)


def is_bent(f: BooleanFunction) -> bool:
    return classify(fwht(f)).tag is Tag.BENT


def dual_of_bent(s: WalshSpectrum) -> BooleanFunction:
    """The dual: f~(a) = 1 exactly where chi_f(a) < 0."""
    if classify(s).tag is not Tag.BENT:
        raise NotBentError("spectrum is not bent")
    return BooleanFunction((s.values < 0).astype(np.uint8), s.field, s.bivariate)


def parseval_ok(s: WalshSpectrum) -> bool:
    # |chi| <= 2^n, so the sum of squares is at most 2^(3n) < 2^63 for n <= 20
    v = s.values.astype(object) if s.n > 20 else s.values
    return int(np.sum(v * v)) == 1 << (2 * s.n)
