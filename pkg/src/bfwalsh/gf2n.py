"""Arithmetic in GF(2^n).

Elements are plain Python ints (or integer numpy arrays): bit ``i`` is the
coefficient of ``x^i`` in the polynomial basis.  All operations accept either
a scalar or an array and return the same kind, so constructions can evaluate
a formula over the whole field in one vectorised call.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import (
    BfwalshError,
    KNotDivisorError,
    NonPrimitivePolynomialError,
    ReduciblePolynomialError,
)

LOG_TABLE_MAX_N = 24

# Exponent lists of primitive polynomials.  n = 6, 8, 9 are the polynomials
# used by the worked examples; the rest are standard primitive choices.
DEFAULT_POLYS: dict[int, tuple[int, ...]] = {
    2: (2, 1, 0),
    3: (3, 1, 0),
    4: (4, 1, 0),
    5: (5, 2, 0),
    6: (6, 4, 3, 1, 0),
    7: (7, 1, 0),
    8: (8, 4, 3, 2, 0),
    9: (9, 4, 0),
    10: (10, 3, 0),
    11: (11, 2, 0),
    12: (12, 6, 4, 1, 0),
    13: (13, 4, 3, 1, 0),
    14: (14, 10, 6, 1, 0),
    15: (15, 1, 0),
    16: (16, 12, 3, 1, 0),
    17: (17, 3, 0),
    18: (18, 7, 0),
    19: (19, 5, 2, 1, 0),
    20: (20, 3, 0),
    21: (21, 2, 0),
    22: (22, 1, 0),
    23: (23, 5, 0),
    24: (24, 7, 2, 1, 0),
}


def poly_from_exponents(exps) -> int:
    p = 0
    for e in exps:
        p |= 1 << e
    return p


# --- GF(2)[x] helpers on Python ints -------------------------------------

def _pdeg(a: int) -> int:
    return a.bit_length() - 1


def _pmod(a: int, m: int) -> int:
    dm = _pdeg(m)
    while a and _pdeg(a) >= dm:
        a ^= m << (_pdeg(a) - dm)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmulmod(a: int, b: int, m: int) -> int:
    return _pmod(clmul(a, b), m)


def is_irreducible(poly: int) -> bool:
    """No factor of degree <= n/2, i.e. gcd(x^(2^i) - x, poly) = 1 for i <= n/2."""
    n = _pdeg(poly)
    if n < 1:
        return False
    xp = 0b10
    for _ in range(n // 2):
        xp = _pmulmod(xp, xp, poly)
        if _pgcd(poly, xp ^ 0b10) != 1:
            return False
    return True


def _parity(a):
    a = np.asarray(a)
    return (np.bitwise_count(a.astype(np.uint64)) & 1).astype(np.uint8)


@dataclass(frozen=True, eq=False)
class Field:
    """GF(2^n) = GF(2)[x]/(poly); the generator is the class of x."""

    n: int
    poly: int
    exp: np.ndarray | None = dc_field(default=None, repr=False)
    log: np.ndarray | None = dc_field(default=None, repr=False)
    trace_mask: int = dc_field(default=0, repr=False)

    # --- basics ---------------------------------------------------------
    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def has_log_tables(self) -> bool:
        return self.exp is not None

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, Field) and (self.n, self.poly) == (other.n, other.poly)

    def __hash__(self):
        return hash((self.n, self.poly))

    # --- arithmetic -----------------------------------------------------
    @staticmethod
    def add(a, b):
        return a ^ b

    def mul(self, a, b):
        scalar = np.isscalar(a) and np.isscalar(b)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.exp is not None:
            la = self.log[a]
            lb = self.log[b]
            r = np.where((a == 0) | (b == 0), 0, self.exp[la + lb])
        else:
            r = self._clmul_reduce(a, b)
        return int(r) if scalar else r

    def _clmul_reduce(self, a, b):
        a, b = np.broadcast_arrays(a, b)
        a = a.copy()
        r = np.zeros_like(a)
        top = 1 << self.n
        for i in range(self.n):
            r ^= np.where((b >> i) & 1, a, 0)
            a = a << 1
            a = np.where(a & top, a ^ self.poly, a)
        return r

    def square(self, a):
        return self.mul(a, a)

    def pow(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponent; use inv()")
        scalar = np.isscalar(a)
        a = np.asarray(a, dtype=np.int64)
        q1 = self.order - 1
        if self.exp is not None:
            if e == 0:
                r = np.ones_like(a)
            else:
                r = np.where(a == 0, 0, self.exp[(self.log[a] * (e % q1)) % q1])
        else:
            r = np.ones_like(a)
            base = a.copy()
            ee = e % q1 if e else 0
            if e and ee == 0:
                ee = q1
            while ee:
                if ee & 1:
                    r = self._clmul_reduce(r, base)
                base = self._clmul_reduce(base, base)
                ee >>= 1
            if e:
                r = np.where(a == 0, 0, r)
        return int(r) if scalar else r

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of 0 in GF(2^n)")
        return self.pow(a, self.order - 2)

    def frobenius(self, a, k: int = 1):
        """a -> a^(2^k)."""
        for _ in range(k % self.n):
            a = self.square(a)
        return a

    def gen_pow(self, k: int) -> int:
        """xi^k for the field generator xi."""
        return self.pow(2, k % (self.order - 1)) if self.n > 1 else 1

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of 0")
        if self.log is not None:
            return int(self.log[a])
        g, k = 1, 0
        while g != a:
            g = self.mul(g, 2)
            k += 1
            if k > self.order:
                raise BfwalshError("generator is not primitive")
        return k

    # --- traces and subfields -------------------------------------------
    def _check_divisor(self, k: int):
        if k <= 0 or self.n % k:
            raise KNotDivisorError(f"{k} does not divide {self.n}")

    def trace(self, k: int, a):
        """Relative trace Tr_k^n(a) = sum of a^(2^(k i)), i < n/k."""
        self._check_divisor(k)
        acc = a
        t = a
        for _ in range(self.n // k - 1):
            t = self.frobenius(t, k)
            acc = acc ^ t
        return acc

    def trace_bit(self, a):
        """Absolute trace as a 0/1 value, via the linear trace mask."""
        if np.isscalar(a):
            return bin(int(a) & self.trace_mask).count("1") & 1
        return _parity(np.asarray(a, dtype=np.int64) & self.trace_mask)

    def subtrace_bit(self, k: int, a):
        """Tr_1^k(a) for a in the subfield GF(2^k) (caller checks membership)."""
        self._check_divisor(k)
        acc = a
        t = a
        for _ in range(k - 1):
            t = self.square(t)
            acc = acc ^ t
        if np.isscalar(acc):
            return int(acc) & 1
        return (np.asarray(acc) & 1).astype(np.uint8)

    def in_subfield(self, m: int, a):
        self._check_divisor(m)
        return self.frobenius(a, m) == a

    def subfield_elements(self, m: int) -> np.ndarray:
        self._check_divisor(m)
        if m == self.n:
            return self.elements()
        q1 = self.order - 1
        step = q1 // ((1 << m) - 1)
        nz = [self.gen_pow(j * step) for j in range((1 << m) - 1)]
        return np.array([0] + sorted(nz), dtype=np.int64)

    # --- text form --------------------------------------------------------
    def format(self, a: int) -> str:
        if a == 0:
            return "0"
        return f"g^{self.dlog(int(a))}"

    def parse(self, s: str | int) -> int:
        if isinstance(s, (int, np.integer)):
            v = int(s)
        else:
            s = s.strip()
            m = re.fullmatch(r"(?:g|xi|ξ)\^?(\d*)", s)
            if m:
                v = self.gen_pow(int(m.group(1)) if m.group(1) else 1)
            elif s.lower().startswith("0x"):
                v = int(s, 16)
            elif s.isdigit() and int(s) in (0, 1):
                v = int(s)
            else:
                raise BfwalshError(f"cannot parse field element {s!r}")
        if not 0 <= v < self.order:
            raise BfwalshError(f"element {s!r} outside GF(2^{self.n})")
        return v

    def to_config(self) -> dict:
        return {"n": self.n, "poly_hex": hex(self.poly), "generator": "g"}


def field_new(n: int, poly: int | None = None, log_tables: bool = True) -> Field:
    """Validate ``poly`` and build the field (with log tables when feasible)."""
    if not 2 <= n <= LOG_TABLE_MAX_N:
        raise BfwalshError(f"n={n} outside supported range 2..{LOG_TABLE_MAX_N}")
    if poly is None:
        poly = poly_from_exponents(DEFAULT_POLYS[n])
    if _pdeg(poly) != n:
        raise BfwalshError(f"polynomial {poly:#x} is not monic of degree {n}")
    if not is_irreducible(poly):
        raise ReduciblePolynomialError(f"polynomial {poly:#x} is reducible over GF(2)")

    q = 1 << n
    f = Field(n, poly)
    exp = log = None
    if log_tables:
        # powers x^0 .. x^(q-2) by block doubling: x^(s+i) = x^s * x^i
        powers = np.ones(1, dtype=np.int64)
        xs = 2
        while powers.size < q - 1:
            powers = np.concatenate([powers, f._clmul_reduce(powers, np.int64(xs))])
            xs = _pmulmod(xs, xs, poly)
        powers = powers[: q - 1]
        ones = np.flatnonzero(powers[1:] == 1)
        if ones.size:
            raise NonPrimitivePolynomialError(
                f"x has order {int(ones[0]) + 1} < {q - 1} modulo {poly:#x}"
            )
        exp = np.concatenate([powers, powers])
        log = np.zeros(q, dtype=np.int64)
        log[powers] = np.arange(q - 1)
        exp.setflags(write=False)
        log.setflags(write=False)

    f = Field(n, poly, exp, log, 0)
    mask = 0
    for i in range(n):
        if int(f.trace(1, 1 << i)) & 1:
            mask |= 1 << i
    object.__setattr__(f, "trace_mask", mask)
    return f


@lru_cache(maxsize=None)
def builtin_field(n: int) -> Field:
    return field_new(n)


def load_field(spec: str) -> Field:
    """Resolve a ``--field`` argument: builtin name (``8``, ``gf2^8``) or JSON path."""
    m = re.fullmatch(r"(?:gf2\^|gf|f)?(\d+)", spec.strip().lower())
    if m:
        return builtin_field(int(m.group(1)))
    path = Path(spec)
    if not path.exists():
        raise BfwalshError(f"unknown field {spec!r}")
    cfg = json.loads(path.read_text())
    f = field_new(int(cfg["n"]), int(cfg["poly_hex"], 16))
    gen = cfg.get("generator", "g")
    if gen not in ("g", "xi"):
        raise BfwalshError("only the class of x is supported as generator")
    return f


def norm_exponent(m: int) -> int:
    return (1 << m) + 1


def modinv(a: int, mod: int) -> int | None:
    if math.gcd(a, mod) != 1:
        return None
    return pow(a, -1, mod)
