"""Kasami base g(x) = Tr_1^m(lambda x^(2^m+1)) on GF(2^(2m)) plus linear products."""
from __future__ import annotations

import numpy as np

from ..boolfun import BooleanFunction, from_trace_monomial, is_balanced
from ..errors import BadFieldDegreeError, LambdaNotInSubfieldError
from ..gf2n import Field
from ..walsh import Tag
from .common import (
    ConstructionReport,
    build_report,
    check_pair,
    check_triple,
    predict_from_bit,
    predict_from_conditions,
)
from .lemma1 import lemma1_combine


def _half(field: Field) -> int:
    if field.n % 2 or field.n < 4:
        raise BadFieldDegreeError(f"need n = 2m with m >= 2, got n={field.n}")
    return field.n // 2


def _check_lambda(field: Field, lam: int):
    m = _half(field)
    if lam == 0 or not field.in_subfield(m, lam):
        raise LambdaNotInSubfieldError(f"lambda={field.format(lam)} not in GF(2^{m})*")


def kasami(field: Field, lam: int) -> BooleanFunction:
    _check_lambda(field, lam)
    m = field.n // 2
    return from_trace_monomial(field, m, lam, (1 << m) + 1)


def kasami_dual(field: Field, lam: int) -> BooleanFunction:
    """Closed-form dual Tr_1^m(lambda^-1 a^(2^m+1)) + 1."""
    _check_lambda(field, lam)
    m = field.n // 2
    d = from_trace_monomial(field, m, field.inv(lam), (1 << m) + 1)
    return BooleanFunction(d.table ^ 1, field)


def kasami_walsh_closed_form(field: Field, lam: int) -> np.ndarray:
    """-2^m (-1)^Tr_1^m(lambda^-1 a^(2^m+1)) for every a."""
    m = field.n // 2
    d = from_trace_monomial(field, m, field.inv(lam), (1 << m) + 1)
    return -(1 << m) * (1 - 2 * d.table.astype(np.int64))


def _tbit(field: Field, scale: int, a: int, b: int) -> int:
    """Tr_1^n(scale * a^(2^m) * b)."""
    m = field.n // 2
    return field.trace_bit(field.mul(scale, field.mul(field.frobenius(a, m), b)))


def thm1_conditions(field: Field, lam: int, u: int, v: int, r: int) -> tuple[int, int, int]:
    """(t1, t2, t3) from the pairs (r, v), (r, u), (u, v)."""
    _check_lambda(field, lam)
    check_triple(u, v, r)
    li = field.inv(lam)
    return _tbit(field, li, r, v), _tbit(field, li, r, u), _tbit(field, li, u, v)


def thm1_conditions_unscaled(field: Field, u: int, v: int, r: int) -> tuple[int, int, int]:
    """The same bits without the lambda^-1 factor, for comparison with published tables."""
    return _tbit(field, 1, r, v), _tbit(field, 1, r, u), _tbit(field, 1, u, v)


def thm1_predict(conds, n: int):
    return predict_from_conditions(conds, n)


def kasami_triple(field: Field, lam: int, u: int, v: int, r: int) -> BooleanFunction:
    check_triple(u, v, r)
    return lemma1_combine(kasami(field, lam), u, v, r)


def thm1_construct_and_predict(field: Field, lam: int, u: int, v: int, r: int) -> ConstructionReport:
    conds = thm1_conditions(field, lam, u, v, r)
    f = kasami_triple(field, lam, u, v, r)
    extra = {}
    plain = thm1_conditions_unscaled(field, u, v, r)
    if plain != conds:
        extra["conditions_without_lambda_inverse"] = list(plain)
    params = {"n": field.n, "lambda": field.format(lam),
              "u": field.format(u), "v": field.format(v), "r": field.format(r)}
    return build_report("kasami-triple", params, conds, thm1_predict(conds, field.n), f, extra)


def thm2_condition(field: Field, lam: int, u: int, v: int) -> int:
    return _tbit(field, field.inv(lam), u, v)


def thm2_semibent(field: Field, lam: int, u: int, v: int) -> tuple[Tag, bool]:
    """Predicted tag and whether the balancedness criterion applies."""
    _check_lambda(field, lam)
    check_pair(u, v)
    bit = thm2_condition(field, lam, u, v)
    m = field.n // 2
    li = field.inv(lam)
    e = (1 << m) + 1
    # norm values lie in GF(2^m); the trace over that subfield is what can be 1
    nu = field.subtrace_bit(m, field.mul(li, field.pow(u, e)))
    nv = field.subtrace_bit(m, field.mul(li, field.pow(v, e)))
    return predict_from_bit(bit), bool(bit and (nu or nv))


def kasami_double(field: Field, lam: int, u: int, v: int) -> BooleanFunction:
    return lemma1_combine(kasami(field, lam), u, v)


def thm2_construct_and_predict(field: Field, lam: int, u: int, v: int) -> ConstructionReport:
    tag, balanced = thm2_semibent(field, lam, u, v)
    f = kasami_double(field, lam, u, v)
    bit = thm2_condition(field, lam, u, v)
    extra = {"predicted_balanced": balanced, "measured_balanced": is_balanced(f)}
    params = {"n": field.n, "lambda": field.format(lam), "u": field.format(u), "v": field.format(v)}
    return build_report("kasami-double", params, (bit,), (tag, None), f, extra)


def semibent_pair_count(field: Field, lam: int) -> int:
    """#{(u, v) in (F*)^2 : Tr_1^n(lambda^-1 u^(2^m) v) = 1}, by enumeration."""
    _check_lambda(field, lam)
    m = field.n // 2
    nz = field.elements()[1:]
    scaled = field.mul(field.inv(lam), field.frobenius(nz, m))
    total = 0
    for s in scaled:
        total += int(field.trace_bit(field.mul(int(s), nz)).sum())
    return total


def semibent_pair_closed_form(n: int) -> int:
    return 2 ** (n - 1) * (2**n - 1)
