import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bfwalsh.errors import (
    BfwalshError,
    KNotDivisorError,
    NonPrimitivePolynomialError,
    ReduciblePolynomialError,
)
from bfwalsh.gf2n import (
    DEFAULT_POLYS,
    builtin_field,
    clmul,
    field_new,
    is_irreducible,
    load_field,
    poly_from_exponents,
)


def schoolbook(a, b, poly, n):
    """Shift-and-add multiplication with reduction after every step."""
    acc = 0
    for _ in range(n):
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> n:
            a ^= poly
    return acc


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_mul_matches_schoolbook_all_pairs(n):
    f = builtin_field(n)
    a, b = np.meshgrid(f.elements(), f.elements(), indexing="ij")
    got = f.mul(a.ravel(), b.ravel())
    if n <= 6:
        want = [schoolbook(int(x), int(y), f.poly, n) for x, y in zip(a.ravel(), b.ravel())]
    else:
        rows = np.random.default_rng(n).choice(a.size, 2000, replace=False)
        got = got[rows]
        want = [schoolbook(int(a.ravel()[i]), int(b.ravel()[i]), f.poly, n) for i in rows]
    assert np.array_equal(got, want)


@pytest.mark.parametrize("n", [6, 10])
def test_log_and_clmul_paths_agree(n):
    f = builtin_field(n)
    plain = field_new(n, f.poly, log_tables=False)
    x = np.random.default_rng(1).integers(0, f.order, 4000)
    y = np.random.default_rng(2).integers(0, f.order, 4000)
    assert np.array_equal(f.mul(x, y), plain.mul(x, y))


@pytest.mark.parametrize("n", range(2, 11))
def test_inverse(n):
    f = builtin_field(n)
    a = f.elements()[1:]
    assert np.all(f.mul(a, f.inv(a)) == 1)


def test_inv_zero(f6):
    with pytest.raises(ZeroDivisionError):
        f6.inv(0)


def test_pow_conventions(f6):
    assert f6.pow(0, 0) == 1
    assert f6.pow(0, 5) == 0
    a = f6.gen_pow(7)
    assert f6.pow(a, 63) == 1
    assert f6.pow(a, 64) == a
    with pytest.raises(ValueError):
        f6.pow(a, -1)
    acc = 1
    for e in range(20):
        assert f6.pow(a, e) == acc
        acc = f6.mul(acc, a)


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_field_axioms(a, b, c):
    f = builtin_field(8)
    assert f.mul(a, f.add(b, c)) == f.mul(a, b) ^ f.mul(a, c)
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.square(a ^ b) == f.square(a) ^ f.square(b)


@given(st.integers(0, 4095), st.integers(0, 4095))
def test_trace_is_linear(a, b):
    f = builtin_field(12)
    for k in (1, 2, 3, 4, 6):
        assert f.trace(k, a ^ b) == f.trace(k, a) ^ f.trace(k, b)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
def test_trace_transitivity_and_range(k):
    f = builtin_field(12)
    x = f.elements()
    t = f.trace(k, x)
    assert np.all(f.in_subfield(k, t))
    # Tr_1^n = Tr_1^k o Tr_k^n
    assert np.array_equal(f.subtrace_bit(k, t), f.trace_bit(x))
    assert np.array_equal(f.trace(1, x), f.trace_bit(x))


def test_trace_bit_balanced(f8):
    assert f8.trace_bit(f8.elements()).sum() == 128


def test_trace_needs_divisor(f6):
    with pytest.raises(KNotDivisorError):
        f6.trace(4, 3)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_norm_map_is_uniform(m):
    f = builtin_field(2 * m)
    norms = f.pow(f.elements()[1:], (1 << m) + 1)
    assert np.all(f.in_subfield(m, norms))
    vals, counts = np.unique(norms, return_counts=True)
    assert vals.size == (1 << m) - 1
    assert np.all(counts == (1 << m) + 1)


@pytest.mark.parametrize("n,m", [(6, 2), (6, 3), (8, 4), (12, 4)])
def test_subfield_elements(n, m):
    f = builtin_field(n)
    s = f.subfield_elements(m)
    assert s.size == 1 << m and s[0] == 0
    prods = f.mul(s[:, None], s[None, :])
    assert np.all(f.in_subfield(m, prods))


def test_reducible_and_nonprimitive():
    with pytest.raises(ReduciblePolynomialError):
        field_new(4, 0b10101)  # x^4 + x^2 + 1 = (x^2 + x + 1)^2
    assert is_irreducible(0b11111)
    with pytest.raises(NonPrimitivePolynomialError):
        field_new(4, 0b11111)  # x has order 5
    with pytest.raises(BfwalshError):
        field_new(4, 0b1011)


@pytest.mark.parametrize("n", sorted(k for k in DEFAULT_POLYS if k <= 16))
def test_default_polys_primitive(n):
    f = field_new(n, poly_from_exponents(DEFAULT_POLYS[n]))
    assert f.order == 1 << n


def test_clmul_small():
    assert clmul(0b11, 0b11) == 0b101
    assert clmul(0, 123) == 0


@given(st.integers(1, 255))
def test_format_parse_roundtrip(a):
    f = builtin_field(8)
    assert f.parse(f.format(a)) == a
    assert f.parse(hex(a)) == a
    assert f.gen_pow(f.dlog(a)) == a


def test_parse_rejects(f6):
    for bad in ("0x40", "banana", "7"):
        with pytest.raises(BfwalshError):
            f6.parse(bad)
    assert f6.parse("0") == 0 and f6.format(0) == "0"
    assert f6.parse("xi^9") == f6.gen_pow(9)


def test_load_field(tmp_path):
    assert load_field("gf2^8") == builtin_field(8)
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"n": 6, "poly_hex": "0x5b", "generator": "g"}))
    assert load_field(str(p)) == builtin_field(6)
    with pytest.raises(BfwalshError):
        load_field(str(tmp_path / "missing.json"))
