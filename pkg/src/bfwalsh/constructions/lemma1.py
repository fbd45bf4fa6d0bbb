"""Adding a product of two or three linear functions to a base function g.

For f = g + Tr(ux)Tr(vx)Tr(rx) the spectrum of f is an explicit signed
combination of g's spectrum at the eight points a + (subset sums of u, v, r),
divided by 4; for r = v it collapses to four points divided by 2.  The
identity holds for every g, bent or not.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..boolfun import BooleanFunction, bivariate_linear, linear
from ..errors import NonIntegralResultError, ZeroParameterError
from ..walsh import WalshSpectrum


def pack(g_or_field, e) -> int:
    """A pair (e1, e2) over GF(2^m) as its bivariate index e1 + 2^m e2."""
    if isinstance(e, tuple):
        fld = getattr(g_or_field, "field", g_or_field)
        return int(e[0]) | (int(e[1]) << fld.n)
    return int(e)


def linear_like(g: BooleanFunction, c) -> BooleanFunction:
    """The linear function x -> <c, x> on g's domain."""
    if g.bivariate:
        c = pack(g, c)
        q = g.field.order
        return bivariate_linear(g.field, c & (q - 1), c >> g.field.n)
    return linear(g.field, c)


def lemma1_combine(g: BooleanFunction, u, v, r=None) -> BooleanFunction:
    """g + Tr(ux)Tr(vx)[Tr(rx)]; with r omitted, the two-factor product."""
    for name, e in (("u", u), ("v", v), ("r", r)):
        if e is not None and pack(g, e) == 0:
            raise ZeroParameterError(f"{name} must be nonzero")
    prod = linear_like(g, u) & linear_like(g, v)
    if r is not None:
        prod = prod & linear_like(g, r)
    return g ^ prod


def _combination(values: np.ndarray, a, u: int, v: int, r: int | None):
    def at(shift):
        return values[np.bitwise_xor(a, shift)]

    if r is None or r == v:
        num = at(0) + at(u) + at(v) - at(u ^ v)
        return num, 2
    num = (
        3 * at(0) + at(v) + at(u) - at(u ^ v)
        + at(r) - at(r ^ v) - at(r ^ u) + at(r ^ u ^ v)
    )
    return num, 4


def lemma1_predicted_walsh(spec_g: WalshSpectrum, u, v, r, a) -> int:
    """Predicted chi_f(a); r=None (or r=v) selects the two-factor formula."""
    u, v = pack(spec_g.field, u), pack(spec_g.field, v)
    r = None if r is None else pack(spec_g.field, r)
    num, den = _combination(spec_g.values, pack(spec_g.field, a), u, v, r)
    val = Fraction(int(num), den)
    if val.denominator != 1:
        raise NonIntegralResultError(f"prediction {val} at a={a} is not an integer")
    return int(val)


def lemma1_predicted_spectrum(spec_g: WalshSpectrum, u, v, r=None) -> np.ndarray:
    """The same prediction at every point at once."""
    u, v = pack(spec_g.field, u), pack(spec_g.field, v)
    r = None if r is None else pack(spec_g.field, r)
    a = np.arange(spec_g.values.size, dtype=np.int64)
    num, den = _combination(spec_g.values, a, u, v, r)
    if np.any(num % den):
        raise NonIntegralResultError("non-integral prediction")
    return num // den
