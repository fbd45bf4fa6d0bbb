"""Shared pieces: parameter checks, the five-valued prediction tables, reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..boolfun import BooleanFunction, algebraic_degree
from ..errors import InvalidPairError, InvalidTripleError, ZeroParameterError
from ..walsh import Tag, WalshSpectrum, classify, classify_values, distribution, fwht

# Condition patterns (t1, t2, t3) listed for each distribution table.
TABLE_A_PATTERNS = frozenset({(0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, 1)})
TABLE_B_PATTERNS = frozenset({(1, 1, 0), (1, 0, 1), (0, 1, 1)})


def five_valued_table(n: int, pattern: tuple[int, int, int]) -> dict[int, int]:
    """Walsh value distribution for a nonzero condition pattern, n = 2m.

    Zero-count entries (possible at m = 2) are dropped.
    """
    m = n // 2
    # written 2^n - 2^(n-1) - 2^(n-3) in the theorem; equals 3 * 2^(n-3)
    zeros = 2**n - 2 ** (n - 1) - 2 ** (n - 3)
    b, b2 = 2**m, 2 ** (m + 1)
    if pattern in TABLE_A_PATTERNS:
        table = {
            0: zeros,
            b: 2 ** (n - 2) + 2 ** (m - 1),
            -b: 2 ** (n - 2) - 2 ** (m - 1),
            b2: 2 ** (n - 4),
            -b2: 2 ** (n - 4),
        }
    elif pattern in TABLE_B_PATTERNS:
        table = {
            0: zeros,
            b: 2 ** (n - 2),
            -b: 2 ** (n - 2),
            b2: 2 ** (n - 4) + 2 ** (m - 2),
            -b2: 2 ** (n - 4) - 2 ** (m - 2),
        }
    else:
        raise ValueError(f"pattern {pattern} has no table")
    return {v: c for v, c in table.items() if c}


def predict_from_conditions(conds: tuple[int, int, int], n: int) -> tuple[Tag, dict[int, int] | None]:
    """Bent for (0,0,0); otherwise five-valued with table A or B."""
    conds = tuple(int(t) for t in conds)
    if conds == (0, 0, 0):
        return Tag.BENT, None
    table = five_valued_table(n, conds)
    return classify_values(table, n).tag, table


def predict_from_bit(bit: int) -> Tag:
    """Two-term constructions: bent when the condition bit is 0, else semi-bent."""
    return Tag.SEMI_BENT if bit else Tag.BENT


def check_nonzero(**elems):
    for name, e in elems.items():
        if (e == (0, 0)) if isinstance(e, tuple) else e == 0:
            raise ZeroParameterError(f"{name} must be nonzero")


def check_triple(u, v, r):
    """u, v, r nonzero, pairwise distinct, u + v + r != 0 (ints or pairs)."""
    check_nonzero(u=u, v=v, r=r)
    if len({u, v, r}) < 3:
        raise InvalidTripleError("u, v, r must be pairwise distinct")
    if isinstance(u, tuple):
        s = (u[0] ^ v[0] ^ r[0], u[1] ^ v[1] ^ r[1])
        zero = s == (0, 0)
    else:
        zero = (u ^ v ^ r) == 0
    if zero:
        raise InvalidTripleError("u + v + r must be nonzero")


def check_pair(u, v):
    check_nonzero(u=u, v=v)
    if u == v:
        raise InvalidPairError("u and v must be distinct")


@dataclass
class ConstructionReport:
    construction: str
    params: dict
    conditions: tuple[int, ...] | None
    predicted_class: str
    predicted_distribution: dict[int, int] | None
    measured_class: str
    measured_distribution: dict[int, int]
    degree: int
    extra: dict = field(default_factory=dict)
    match: bool = False

    def __post_init__(self):
        ok = self.predicted_class == self.measured_class
        if self.predicted_distribution is not None:
            ok = ok and self.predicted_distribution == self.measured_distribution
        if "predicted_balanced" in self.extra and self.extra["predicted_balanced"]:
            ok = ok and self.extra["measured_balanced"]
        self.match = bool(ok)

    def to_dict(self) -> dict:
        def dist(d):
            return None if d is None else {str(k): v for k, v in sorted(d.items(), reverse=True)}

        return {
            "construction": self.construction,
            "params": self.params,
            "conditions": list(self.conditions) if self.conditions is not None else None,
            "predicted": {"class": self.predicted_class, "distribution": dist(self.predicted_distribution)},
            "measured": {"class": self.measured_class, "distribution": dist(self.measured_distribution)},
            "match": self.match,
            "degree": self.degree,
            **({"extra": self.extra} if self.extra else {}),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def measure(f: BooleanFunction) -> tuple[WalshSpectrum, str, dict[int, int]]:
    s = fwht(f)
    return s, str(classify(s)), distribution(s)


def build_report(name, params, conditions, predicted, f: BooleanFunction, extra=None) -> ConstructionReport:
    tag, table = predicted
    _, mclass, mdist = measure(f)
    return ConstructionReport(
        construction=name,
        params=params,
        conditions=tuple(conditions) if conditions is not None else None,
        predicted_class=str(tag),
        predicted_distribution=table,
        measured_class=mclass,
        measured_distribution=mdist,
        degree=algebraic_degree(f),
        extra=extra or {},
    )
