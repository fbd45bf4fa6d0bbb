"""Maiorana-McFarland base g(x, y) = Tr(x pi(y)) + h(y) over GF(2^m)^2.

Pairs (e1, e2) are plain tuples of field elements; the bivariate truth table
and spectrum use index e1 + 2^m e2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..boolfun import BooleanFunction, grid
from ..errors import (
    BadDivisorError,
    CrossConditionViolatedError,
    NoDInverseError,
    NotAPermutationError,
    NotInSubfieldError,
    NotLinearizedError,
)
from ..gf2n import Field
from .common import (
    ConstructionReport,
    build_report,
    check_pair,
    check_triple,
    predict_from_bit,
    predict_from_conditions,
)
from .lemma1 import lemma1_combine

Pair = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Permutation:
    table: np.ndarray
    inverse: np.ndarray
    label: str = "pi"

    def __call__(self, y):
        return self.table[y]

    def inv(self, y):
        return self.inverse[y]

    def is_additive(self) -> bool:
        q = self.table.size
        n = q.bit_length() - 1
        if self.table[0] != 0:
            return False
        a = np.arange(q, dtype=np.int64)
        acc = np.zeros(q, dtype=np.int64)
        for i in range(n):
            acc ^= np.where((a >> i) & 1, self.table[1 << i], 0)
        return bool(np.array_equal(acc, self.table))


def permutation_from_table(table, label: str = "pi") -> Permutation:
    t = np.asarray(table, dtype=np.int64)
    q = t.size
    if t.min() < 0 or t.max() >= q or np.unique(t).size != q:
        raise NotAPermutationError(f"{label} is not a bijection")
    inv = np.empty_like(t)
    inv[t] = np.arange(q)
    t = t.copy()
    t.setflags(write=False)
    inv.setflags(write=False)
    return Permutation(t, inv, label)


def frobenius_permutation(field: Field, j: int) -> Permutation:
    """y -> y^(2^j), always a linearized permutation."""
    return permutation_from_table(field.frobenius(field.elements(), j), f"y^(2^{j})")


def power_permutation(field: Field, d: int) -> Permutation:
    return permutation_from_table(field.pow(field.elements(), d), f"y^{d}")


def mm_construct(field: Field, pi: Permutation, h: BooleanFunction | None = None) -> BooleanFunction:
    """g(x, y) = Tr_1^m(x pi(y)) + h(y)."""
    x, y = grid(field)
    vals = field.trace_bit(field.mul(x, pi(y)))
    if h is not None:
        vals = vals ^ h.table[y]
    return BooleanFunction(vals, field, bivariate=True)


def mm_dual_eq26(field: Field, pi: Permutation, h: BooleanFunction | None, a1, a2):
    """Tr_1^m(a2 pi^-1(a1)) + h(pi^-1(a1)); vectorised."""
    p = pi.inv(a1)
    bit = field.trace_bit(field.mul(a2, p))
    if h is not None:
        bit = bit ^ h.table[p]
    return bit


def mm_dual_function(field: Field, pi: Permutation, h: BooleanFunction | None = None) -> BooleanFunction:
    a1, a2 = grid(field)
    return BooleanFunction(mm_dual_eq26(field, pi, h, a1, a2), field, bivariate=True)


def trace_h(field: Field) -> BooleanFunction:
    """h(y) = Tr_1^m(y)."""
    return BooleanFunction(field.trace_bit(field.elements()), field)


def _check_linearized(pi: Permutation):
    if not pi.is_additive():
        raise NotLinearizedError(f"{pi.label} is not additive")


def _tbit(field: Field, pi: Permutation, a: Pair, b: Pair) -> int:
    """Tr_1^m(a2 pi^-1(b1) + b2 pi^-1(a1))."""
    s = field.mul(a[1], int(pi.inv(b[0]))) ^ field.mul(b[1], int(pi.inv(a[0])))
    return field.trace_bit(s)


def _fmt(field: Field, e: Pair) -> list[str]:
    return [field.format(e[0]), field.format(e[1])]


def thm6_conditions(field: Field, pi: Permutation, u: Pair, v: Pair, r: Pair) -> tuple[int, int, int]:
    _check_linearized(pi)
    check_triple(u, v, r)
    return _tbit(field, pi, r, v), _tbit(field, pi, r, u), _tbit(field, pi, u, v)


def thm6_predict(conds, n: int):
    return predict_from_conditions(conds, n)


def mm_linearized_base(field: Field, pi: Permutation) -> BooleanFunction:
    _check_linearized(pi)
    return mm_construct(field, pi, trace_h(field))


def mm_linearized_triple(field: Field, pi: Permutation, u: Pair, v: Pair, r: Pair) -> BooleanFunction:
    check_triple(u, v, r)
    return lemma1_combine(mm_linearized_base(field, pi), u, v, r)


def thm6_construct(field: Field, pi: Permutation, u: Pair, v: Pair, r: Pair) -> ConstructionReport:
    conds = thm6_conditions(field, pi, u, v, r)
    f = mm_linearized_triple(field, pi, u, v, r)
    params = {"m": field.n, "pi": pi.label,
              "u": _fmt(field, u), "v": _fmt(field, v), "r": _fmt(field, r)}
    return build_report("mm-linearized-triple", params, conds, thm6_predict(conds, 2 * field.n), f)


def thm7_condition(field: Field, pi: Permutation, u: Pair, v: Pair) -> int:
    _check_linearized(pi)
    check_pair(u, v)
    return _tbit(field, pi, u, v)


def thm7_predict(field: Field, pi: Permutation, u: Pair, v: Pair):
    return predict_from_bit(thm7_condition(field, pi, u, v))


def thm7_construct(field: Field, pi: Permutation, u: Pair, v: Pair) -> ConstructionReport:
    bit = thm7_condition(field, pi, u, v)
    f = lemma1_combine(mm_linearized_base(field, pi), u, v)
    params = {"m": field.n, "pi": pi.label, "u": _fmt(field, u), "v": _fmt(field, v)}
    return build_report("mm-linearized-double", params, (bit,), (predict_from_bit(bit), None), f)


def thm8_d(m: int, s: int) -> int:
    """d with d (2^s + 1) = 1 mod 2^m - 1."""
    if s < 1 or m % s or (m // s) % 2 == 0:
        raise BadDivisorError(f"need s | m with m/s odd (m={m}, s={s})")
    mod = (1 << m) - 1
    if math.gcd((1 << s) + 1, mod) != 1:
        raise NoDInverseError(f"2^{s}+1 not invertible mod {mod}")
    return pow((1 << s) + 1, -1, mod)


def thm8_condition(field: Field, s: int, u: Pair, v: Pair) -> int:
    m = field.n
    thm8_d(m, s)
    check_pair(u, v)
    for name, e in (("u", u), ("v", v)):
        if not all(field.in_subfield(s, c) for c in e):
            raise NotInSubfieldError(f"{name} not in GF(2^{s}) x GF(2^{s})")
    if field.mul(u[0], v[1]) ^ field.mul(v[0], u[1]):
        raise CrossConditionViolatedError("u1 v2 + v1 u2 != 0")
    return field.trace_bit(field.mul(field.square(u[0]), v[1]) ^ field.mul(u[1], field.square(v[0])))


def mm_power(field: Field, s: int) -> tuple[Permutation, BooleanFunction]:
    d = thm8_d(field.n, s)
    pi = power_permutation(field, d)
    return pi, mm_construct(field, pi)


def thm8_construct(field: Field, s: int, u: Pair, v: Pair) -> ConstructionReport:
    bit = thm8_condition(field, s, u, v)
    pi, g = mm_power(field, s)
    f = lemma1_combine(g, u, v)
    params = {"m": field.n, "s": s, "d": thm8_d(field.n, s),
              "u": _fmt(field, u), "v": _fmt(field, v)}
    return build_report("mm-niho-power", params, (bit,), (predict_from_bit(bit), None), f)
