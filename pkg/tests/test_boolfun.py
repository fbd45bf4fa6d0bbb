import numpy as np
import pytest
from hypothesis import given, strategies as st

from bfwalsh.boolfun import (
    BooleanFunction,
    algebraic_degree,
    anf,
    bivariate_linear,
    constant,
    cubic_symmetric_sum,
    from_hex,
    from_trace_monomial,
    from_values,
    grid,
    hex_to_bits,
    is_balanced,
    linear,
    mobius,
    weight,
    xor,
)
from bfwalsh.errors import IndicesNotDistinctError, ShapeMismatchError, SubfieldViolationError
from bfwalsh.gf2n import builtin_field

bits6 = st.lists(st.integers(0, 1), min_size=64, max_size=64).map(lambda b: np.array(b, np.uint8))


def anf_by_definition(table):
    n = table.size.bit_length() - 1
    out = np.zeros_like(table)
    for m in range(table.size):
        out[m] = np.bitwise_xor.reduce(table[[x for x in range(table.size) if x & m == x]])
    return out


@given(bits6)
def test_mobius_involution(t):
    assert np.array_equal(mobius(mobius(t)), t)


def test_anf_definition_n4(rng):
    for _ in range(20):
        t = rng.integers(0, 2, 16).astype(np.uint8)
        assert np.array_equal(mobius(t), anf_by_definition(t))


def test_mobius_shape():
    with pytest.raises(ShapeMismatchError):
        mobius(np.zeros(12, np.uint8))


def test_degree_of_trace_monomials(f6):
    # degree of a nonzero Tr(c x^e) is the binary weight of e
    c = f6.gen_pow(5)
    seen = set()
    for e in range(1, 63):
        f = from_trace_monomial(f6, 6, c, e)
        if weight(f):
            assert algebraic_degree(f) == bin(e).count("1")
            seen.add(bin(e).count("1"))
    assert seen == {1, 2, 3, 4, 5}


def test_degree_extremes(f6):
    assert algebraic_degree(constant(f6, 0)) == 0
    assert algebraic_degree(constant(f6, 1)) == 0
    # x^63 = 1 except at 0: the indicator of 0 has full degree
    f = BooleanFunction((f6.elements() == 0).astype(np.uint8), f6)
    assert algebraic_degree(f) == 6


@given(bits6)
def test_hex_roundtrip(t):
    f = BooleanFunction(t, builtin_field(6))
    assert np.array_equal(from_hex(f.field, f.to_hex()).table, t)
    assert len(f.to_hex()) == 16


def test_hex_bit_order():
    assert list(hex_to_bits("1", 4)) == [1, 0, 0, 0]
    assert list(hex_to_bits("8", 4)) == [0, 0, 0, 1]


def test_table_is_readonly(f4):
    f = linear(f4, 3)
    with pytest.raises(ValueError):
        f.table[0] = 1


@given(st.integers(1, 63))
def test_linear_is_balanced(c):
    f6 = builtin_field(6)
    assert is_balanced(linear(f6, c))


def test_xor_shape_mismatch(f4, f6):
    with pytest.raises(ShapeMismatchError):
        xor(linear(f4, 1), linear(f6, 1))


def test_bivariate_grid_and_linear(f4):
    x, y = grid(f4)
    assert x[1] == 1 and y[16] == 1
    f = bivariate_linear(f4, 3, 5)
    g = from_values(f4, lambda x, y: f4.trace_bit(f4.mul(3, x) ^ f4.mul(5, y)), bivariate=True)
    assert f == g and f.n_vars == 8 and f.m == 4


def test_subfield_trace_monomial(f8):
    # x^17 lands in GF(16), so Tr_1^4(x^17) is defined; Tr_1^4(x^3) is not
    f = from_trace_monomial(f8, 4, 1, 17)
    assert weight(f) > 0
    with pytest.raises(SubfieldViolationError):
        from_trace_monomial(f8, 4, 1, 3)


def test_symmetric_sum_known_value(f6):
    g = f6.gen_pow
    assert cubic_symmetric_sum(f6, g(1), g(9), g(27), 0, 1, 2) == g(45)


@given(st.integers(1, 255), st.integers(1, 255), st.integers(1, 255), st.permutations([0, 1, 2]))
def test_symmetric_sum_is_symmetric(u, v, r, perm):
    f = builtin_field(8)
    base = cubic_symmetric_sum(f, u, v, r, 0, 2, 5)
    args = [u, v, r]
    assert cubic_symmetric_sum(f, *[args[p] for p in perm], 0, 2, 5) == base
    assert cubic_symmetric_sum(f, u, v, r, 5, 0, 2) == base


def test_symmetric_sum_indices(f6):
    with pytest.raises(IndicesNotDistinctError):
        cubic_symmetric_sum(f6, 1, 2, 3, 0, 0, 1)


@given(st.integers(1, 63), st.integers(1, 63), st.integers(1, 63))
def test_product_is_cubic_iff_some_symmetric_sum(u, v, r):
    f6 = builtin_field(6)
    prod = linear(f6, u) & linear(f6, v) & linear(f6, r)
    sums = [cubic_symmetric_sum(f6, u, v, r, i, j, k)
            for i in range(6) for j in range(i + 1, 6) for k in range(j + 1, 6)]
    assert (algebraic_degree(prod) == 3) == any(sums)
