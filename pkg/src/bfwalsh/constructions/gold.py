"""Gold-like base g(x) = Tr_1^{4k}(lambda x^(2^k+1)) with lambda + lambda^(2^(3k)) = 1."""
from __future__ import annotations

import numpy as np

from ..boolfun import BooleanFunction, from_trace_monomial, is_balanced
from ..errors import BadFieldDegreeError, InvalidLambdaError
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


def _check_degree(field: Field, k: int):
    if k < 2 or field.n != 4 * k:
        raise BadFieldDegreeError(f"need n = 4k with k >= 2, got n={field.n}, k={k}")


def gold_lambda_valid(field: Field, k: int, lam: int) -> bool:
    _check_degree(field, k)
    return lam != 0 and (lam ^ field.frobenius(lam, 3 * k)) == 1


def gold_valid_lambdas(field: Field, k: int) -> np.ndarray:
    _check_degree(field, k)
    a = field.elements()
    return a[(a ^ field.frobenius(a, 3 * k)) == 1]


def lemma2_map(field: Field, k: int, lam: int) -> np.ndarray:
    """l(x) = lambda x + lambda^(2^k) x^(2^(2k)) over the whole field."""
    x = field.elements()
    return field.mul(lam, x) ^ field.mul(field.frobenius(lam, k), field.frobenius(x, 2 * k))


def lemma2_is_permutation(field: Field, k: int, lam: int) -> bool:
    _check_degree(field, k)
    return np.unique(lemma2_map(field, k, lam)).size == field.order


def _check_lambda(field: Field, k: int, lam: int):
    if not gold_lambda_valid(field, k, lam):
        raise InvalidLambdaError(f"lambda={field.format(lam)} fails lambda + lambda^(2^{3 * k}) = 1")


def gold(field: Field, k: int, lam: int) -> BooleanFunction:
    _check_lambda(field, k, lam)
    return from_trace_monomial(field, field.n, lam, (1 << k) + 1)


def gold_walsh_selfdual(field: Field, k: int, lam: int) -> np.ndarray:
    """2^(2k) (-1)^Tr(lambda a^(2^k+1)): the base is self-dual."""
    t = from_trace_monomial(field, field.n, lam, (1 << k) + 1).table.astype(np.int64)
    return (1 << (2 * k)) * (1 - 2 * t)


def _tbit(field: Field, k: int, lam: int, a: int, b: int) -> int:
    """Tr(lambda (a^(2^k) b + a b^(2^k)))."""
    s = field.mul(field.frobenius(a, k), b) ^ field.mul(a, field.frobenius(b, k))
    return field.trace_bit(field.mul(lam, s))


def thm3_conditions(field: Field, k: int, lam: int, u: int, v: int, r: int) -> tuple[int, int, int]:
    _check_lambda(field, k, lam)
    check_triple(u, v, r)
    return (_tbit(field, k, lam, r, v), _tbit(field, k, lam, r, u), _tbit(field, k, lam, u, v))


def gold_triple(field: Field, k: int, lam: int, u: int, v: int, r: int) -> BooleanFunction:
    check_triple(u, v, r)
    return lemma1_combine(gold(field, k, lam), u, v, r)


def thm3_construct_and_predict(field: Field, k: int, lam: int, u: int, v: int, r: int) -> ConstructionReport:
    conds = thm3_conditions(field, k, lam, u, v, r)
    f = gold_triple(field, k, lam, u, v, r)
    params = {"n": field.n, "k": k, "lambda": field.format(lam),
              "u": field.format(u), "v": field.format(v), "r": field.format(r)}
    return build_report("gold-triple", params, conds, predict_from_conditions(conds, field.n), f)


def thm4_condition(field: Field, k: int, lam: int, u: int, v: int) -> int:
    return _tbit(field, k, lam, u, v)


def thm4_predict(field: Field, k: int, lam: int, u: int, v: int) -> tuple[Tag, bool]:
    _check_lambda(field, k, lam)
    check_pair(u, v)
    bit = thm4_condition(field, k, lam, u, v)
    e = (1 << k) + 1
    nu = field.trace_bit(field.mul(lam, field.pow(u, e)))
    nv = field.trace_bit(field.mul(lam, field.pow(v, e)))
    return predict_from_bit(bit), bool(bit and (nu or nv))


def gold_double(field: Field, k: int, lam: int, u: int, v: int) -> BooleanFunction:
    return lemma1_combine(gold(field, k, lam), u, v)


def thm4_construct_and_predict(field: Field, k: int, lam: int, u: int, v: int) -> ConstructionReport:
    tag, balanced = thm4_predict(field, k, lam, u, v)
    f = gold_double(field, k, lam, u, v)
    extra = {"predicted_balanced": balanced, "measured_balanced": is_balanced(f)}
    params = {"n": field.n, "k": k, "lambda": field.format(lam),
              "u": field.format(u), "v": field.format(v)}
    return build_report("gold-double", params, (thm4_condition(field, k, lam, u, v),), (tag, None), f, extra)
