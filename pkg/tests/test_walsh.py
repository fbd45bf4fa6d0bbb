import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bfwalsh import walsh
from bfwalsh.boolfun import BooleanFunction, constant, from_trace_monomial, linear, weight
from bfwalsh.constructions import kasami, mm_construct, frobenius_permutation
from bfwalsh.errors import NotBentError
from bfwalsh.gf2n import builtin_field
from bfwalsh.walsh import (
    Tag,
    classify,
    classify_values,
    distribution,
    dual_of_bent,
    fwht,
    is_bent,
    naive_walsh,
    parseval_ok,
)


def random_function(n, seed, bivariate=False):
    f = builtin_field(n)
    size = f.order ** 2 if bivariate else f.order
    t = np.random.default_rng(seed).integers(0, 2, size).astype(np.uint8)
    return BooleanFunction(t, f, bivariate)


@given(st.sampled_from([3, 4, 5, 6]), st.integers(0, 2**32 - 1))
def test_fwht_matches_naive(n, seed):
    f = random_function(n, seed)
    s = fwht(f)
    assert all(s[a] == naive_walsh(f, a) for a in range(f.field.order))


@given(st.integers(0, 2**32 - 1))
def test_fwht_matches_naive_bivariate(seed):
    f = random_function(2, seed, bivariate=True)
    s = fwht(f)
    assert all(s[a] == naive_walsh(f, a) for a in range(16))


@given(st.sampled_from([4, 6, 8, 10]), st.integers(0, 2**32 - 1))
def test_parseval_and_value_at_zero(n, seed):
    f = random_function(n, seed)
    s = fwht(f)
    assert parseval_ok(s)
    assert s[0] == (1 << n) - 2 * weight(f)
    assert np.all(s.values % 2 == 0)


def test_parseval_counter_runs():
    before = walsh.parseval_checks
    fwht(linear(builtin_field(5), 3))
    assert walsh.parseval_checks == before + 1


def test_linear_spectrum_is_a_delta(f6):
    # chi of Tr(cx) is 2^n at a = c and 0 elsewhere
    c = f6.gen_pow(11)
    s = fwht(linear(f6, c))
    assert s[c] == 64 and distribution(s) == {0: 63, 64: 1}


def test_classify_kasami_bent(f8):
    s = fwht(kasami(f8, 1))
    assert classify(s).tag is Tag.BENT
    assert str(classify(s)) == "Bent"


def test_classify_zero_function_is_other(f6):
    c = classify(fwht(constant(f6, 0)))
    assert c.tag is Tag.OTHER and c.witness == (0, 64)


def test_classify_odd_gold_is_semibent():
    f5 = builtin_field(5)
    c = classify(fwht(from_trace_monomial(f5, 5, 1, 3)))
    assert c.tag is Tag.SEMI_BENT and c.amplitude == 8


def test_classify_synthetic_sets():
    assert classify_values([0, 16, -16, 32, -32], 8).tag is Tag.FIVE_VALUED
    assert classify_values([0, 32, -32], 8).tag is Tag.SEMI_BENT
    p = classify_values([0, 64, -64], 8)
    assert p.tag is Tag.PLATEAUED and str(p) == "Plateaued(64)"
    assert classify_values([0, 16, -16, 32], 8).tag is Tag.OTHER
    assert classify_values([0, 24, -24], 8).tag is Tag.OTHER
    assert classify_values([16], 8).tag is Tag.BENT


@given(st.sampled_from([3, 5, 7]), st.integers(0, 2**32 - 1))
def test_never_bent_for_odd_n(n, seed):
    assert not is_bent(random_function(n, seed))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_dual_is_involution(n):
    f = builtin_field(n)
    for lam in f.subfield_elements(n // 2)[1:4]:
        g = kasami(f, int(lam))
        d = dual_of_bent(fwht(g))
        assert is_bent(d)
        assert dual_of_bent(fwht(d)) == g


def test_dual_bivariate(f4):
    g = mm_construct(f4, frobenius_permutation(f4, 1))
    d = dual_of_bent(fwht(g))
    assert dual_of_bent(fwht(d)) == g


def test_dual_requires_bent(f6):
    with pytest.raises(NotBentError):
        dual_of_bent(fwht(linear(f6, 1)))


def test_serialisation(f6):
    s = fwht(kasami(f6, 1))
    doc = json.loads(s.to_json())
    assert doc["n"] == 6 and doc["class"] == "Bent"
    assert sum(doc["distribution"].values()) == 64
    raw = np.frombuffer(s.to_bytes(), dtype="<i4")
    assert np.array_equal(raw, s.values)
