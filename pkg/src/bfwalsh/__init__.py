"""Boolean functions over GF(2^n) with few Walsh values: constructions,
exact spectra and prediction checks."""
from .boolfun import BooleanFunction, algebraic_degree, anf, from_trace_monomial, is_balanced, linear
from .gf2n import Field, builtin_field, field_new, load_field
from .walsh import SpectrumClass, Tag, WalshSpectrum, classify, distribution, dual_of_bent, fwht, naive_walsh

__version__ = "0.1.0"
