"""Niho-exponent bent base plus a product of three subfield linear functions."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..boolfun import BooleanFunction, from_trace_monomial, linear
from ..errors import BadFieldDegreeError, BfwalshError, GcdViolationError, NotInSubfieldError
from ..gf2n import Field
from ..walsh import Tag
from .common import ConstructionReport, build_report, check_triple
from .lemma1 import lemma1_combine


def niho_exponents(m: int, k: int) -> list[int]:
    """(2^m - 1) s_i + 1 with s_i = i / 2^k in Z/(2^m + 1), i = 1 .. 2^(k-1) - 1."""
    if k < 1 or math.gcd(k, m) != 1:
        raise GcdViolationError(f"gcd(k={k}, m={m}) != 1")
    mod = (1 << m) + 1
    inv2k = pow(1 << k, -1, mod)
    return [((1 << m) - 1) * (i * inv2k % mod) + 1 for i in range(1, 1 << (k - 1))]


@dataclass(frozen=True)
class NihoParams:
    m: int
    k: int
    exponents: tuple[int, ...]
    alpha: int
    dual_exponent: int


def niho_params(field: Field, k: int, alpha: int | None = None) -> NihoParams:
    if field.n % 2:
        raise BadFieldDegreeError(f"n={field.n} is odd")
    m = field.n // 2
    exps = tuple(niho_exponents(m, k))
    if alpha is None:
        alpha = find_alpha(field)
    elif (alpha ^ field.frobenius(alpha, m)) != 1:
        raise BfwalshError("alpha + alpha^(2^m) must equal 1")
    # gcd(2^k - 1, 2^m - 1) = 2^gcd(k, m) - 1 = 1
    d = pow((1 << k) - 1, -1, (1 << m) - 1) if m > 1 else 1
    return NihoParams(m, k, exps, alpha, d)


def find_alpha(field: Field) -> int:
    """First alpha in generator-power order with alpha + alpha^(2^m) = 1."""
    m = field.n // 2
    for j in range(field.order - 1):
        a = field.gen_pow(j)
        if (a ^ field.frobenius(a, m)) == 1:
            return a
    raise BfwalshError("no alpha with alpha + alpha^(2^m) = 1")


def all_alphas(field: Field) -> np.ndarray:
    m = field.n // 2
    a = field.elements()
    return a[(a ^ field.frobenius(a, m)) == 1]


def niho_bent(field: Field, k: int) -> BooleanFunction:
    """Tr_1^m(x^(2^m+1)) + sum_i Tr_1^n(x^(e_i))."""
    if field.n % 2:
        raise BadFieldDegreeError(f"n={field.n} is odd")
    m = field.n // 2
    g = from_trace_monomial(field, m, 1, (1 << m) + 1)
    for e in niho_exponents(m, k):
        g = g ^ from_trace_monomial(field, field.n, 1, e)
    return g


def niho_dual_eq23(field: Field, params: NihoParams, a):
    """Closed-form dual bit(s) of the Niho base; vectorised over ``a``.

    A = 1 + a + a^(2^m) lies in GF(2^m); A^(1/(2^k-1)) is A raised to the
    inverse of 2^k - 1 modulo 2^m - 1 (0 stays 0).
    """
    n, m, k = field.n, params.m, params.k
    big_a = 1 ^ a ^ field.frobenius(a, m)
    root = field.pow(big_a, params.dual_exponent)
    inner = field.mul(params.alpha, big_a) ^ field.frobenius(params.alpha, n - k) ^ field.frobenius(a, m)
    arg = field.mul(inner, root)
    bad = ~np.asarray(field.in_subfield(m, arg))
    if bad.any():
        raise NotInSubfieldError("dual trace argument left GF(2^m)")
    return field.subtrace_bit(m, arg)


def niho_dual_function(field: Field, params: NihoParams) -> BooleanFunction:
    return BooleanFunction(niho_dual_eq23(field, params, field.elements()), field)


def check_subfield_triple(field: Field, u: int, v: int, r: int):
    m = field.n // 2
    check_triple(u, v, r)
    for name, e in (("u", u), ("v", v), ("r", r)):
        if not field.in_subfield(m, e):
            raise NotInSubfieldError(f"{name}={field.format(e)} not in GF(2^{m})")


def niho_triple(field: Field, k: int, u: int, v: int, r: int) -> BooleanFunction:
    check_subfield_triple(field, u, v, r)
    return lemma1_combine(niho_bent(field, k), u, v, r)


def niho_sum_form(field: Field, k: int, u: int, v: int, r: int) -> BooleanFunction:
    """The variant with Tr(ux) + Tr(vx) + Tr(rx) in place of the product."""
    return niho_bent(field, k) ^ linear(field, u) ^ linear(field, v) ^ linear(field, r)


def thm5_construct(field: Field, k: int, u: int, v: int, r: int) -> ConstructionReport:
    f = niho_triple(field, k, u, v, r)
    params = {"n": field.n, "m": field.n // 2, "k": k,
              "u": field.format(u), "v": field.format(v), "r": field.format(r)}
    return build_report("niho-triple", params, None, (Tag.BENT, None), f)
