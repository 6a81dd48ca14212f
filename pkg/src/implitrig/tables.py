"""Built-in degree tables: golden reference rows and row evaluation.

Each row pairs a support function with the reference values
``(map_degree, ratio_x, ratio_y, ratio_z)`` for the implicit surface it
generates.  Rows are identified by short ASCII keys (``cos3``,
``1+P31``, ...) and may be looked up with or without decorations such as
``θ`` or LaTeX-ish sub/superscripts.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .trig import SphericalSupport, TrigPoly
from .surfaces import (DegreeReport, SurfaceParam, harmonic_surface,
                       revolution_surface, sendra_degrees)

__all__ = [
    "TableRow", "ComputedRow", "REVOLUTION_ROWS", "HARMONIC_ROWS",
    "all_rows", "select_rows", "compute_row",
]


@dataclass(frozen=True)
class TableRow:
    """One golden table row: a support function plus reference values."""

    key: str
    label: str
    kind: str                     # "revolution" or "harmonic"
    data: tuple                   # support coefficients, kind-dependent
    expected: Tuple[int, int, int, int]
    slow: bool
    symmetric: Optional[bool] = None

    def support(self):
        if self.kind == "revolution":
            a0, a, b = self.data
            return TrigPoly(Fraction(a0), {k: Fraction(v) for k, v in a},
                            {k: Fraction(v) for k, v in b})
        return SphericalSupport({(l, m): (Fraction(av), Fraction(bv))
                                 for l, m, av, bv in self.data})

    def surface(self) -> SurfaceParam:
        if self.kind == "revolution":
            return revolution_surface(self.support())
        return harmonic_surface(self.support())


def _rev(key, label, a0, a, b, expected, symmetric, slow=False):
    return TableRow(key, label, "revolution", (a0, tuple(a), tuple(b)),
                    expected, slow, symmetric)


def _har(key, label, data, expected, slow=False):
    return TableRow(key, label, "harmonic", tuple(data), expected, slow)


#: Surfaces of revolution generated by planar support functions.
REVOLUTION_ROWS: Tuple[TableRow, ...] = (
    _rev("cos2", "cos 2θ", 0, [(2, "1")], [], (2, 6, 6, 6), True),
    _rev("cos3", "cos 3θ", 0, [(3, "1")], [], (4, 4, 4, 4), True),
    _rev("cos4", "cos 4θ", 0, [(4, "1")], [], (2, 10, 10, 10), True),
    _rev("cos5", "cos 5θ", 0, [(5, "1")], [], (4, 6, 6, 6), True, slow=True),
    _rev("1/2+1/32cos3", "1/2 + 1/32 cos 3θ", "1/2", [(3, "1/32")], [],
         (2, 8, 8, 8), True),
    _rev("1/2+1/32cos3+sin3", "1/2 + 1/32 cos 3θ + sin 3θ", "1/2",
         [(3, "1/32")], [(3, "1")], (1, 16, 16, 16), False),
    _rev("1/2+sin3", "1/2 + sin 3θ", "1/2", [], [(3, "1")],
         (1, 16, 16, 16), False),
    _rev("cos4+sin3", "cos 4θ + sin 3θ", 0, [(4, "1")], [(3, "1")],
         (1, 20, 20, 20), False),
    _rev("cos4+sin5", "cos 4θ + sin 5θ", 0, [(4, "1")], [(5, "1")],
         (1, 24, 24, 24), False, slow=True),
)

#: Surfaces generated by spherical-harmonic support functions; rows with
#: m > 0 carry both the cos mφ and sin mφ terms with coefficient 1.
HARMONIC_ROWS: Tuple[TableRow, ...] = (
    _har("P20", "P_2^0(cos θ)", [(2, 0, 1, 0)], (2, 6, 6, 6)),
    _har("P21", "P_2^1(cos θ)(cos φ + sin φ)", [(2, 1, 1, 1)],
         (2, 10, 10, 8)),
    _har("P22", "P_2^2(cos θ)(cos 2φ + sin 2φ)", [(2, 2, 1, 1)],
         (2, 10, 10, 10)),
    _har("P30", "P_3^0(cos θ)", [(3, 0, 1, 0)], (4, 4, 4, 4)),
    _har("1+P30", "1 + P_3^0(cos θ)", [(0, 0, 1, 0), (3, 0, 1, 0)],
         (2, 8, 8, 8)),
    _har("P31", "P_3^1(cos θ)(cos φ + sin φ)", [(3, 1, 1, 1)],
         (4, 6, 6, 6)),
    _har("1+P31", "1 + P_3^1(cos θ)(cos φ + sin φ)",
         [(0, 0, 1, 0), (3, 1, 1, 1)], (2, 14, 14, 12)),
    _har("P32", "P_3^2(cos θ)(cos 2φ + sin 2φ)", [(3, 2, 1, 1)],
         (4, 10, 10, 8)),
    _har("P33", "P_3^3(cos θ)(cos 3φ + sin 3φ)", [(3, 3, 1, 1)],
         (4, 10, 10, 10)),
    _har("1+P33", "1 + P_3^3(cos θ)(cos 3φ + sin 3φ)",
         [(0, 0, 1, 0), (3, 3, 1, 1)], (2, 20, 20, 20)),
    _har("P40", "P_4^0(cos θ)", [(4, 0, 1, 0)], (2, 10, 10, 10),
         slow=True),
    _har("P41", "P_4^1(cos θ)(cos φ + sin φ)", [(4, 1, 1, 1)],
         (2, 18, 18, 16), slow=True),
    _har("P42", "P_4^2(cos θ)(cos 2φ + sin 2φ)", [(4, 2, 1, 1)],
         (2, 30, 30, 26), slow=True),
    _har("P43", "P_4^3(cos θ)(cos 3φ + sin 3φ)", [(4, 3, 1, 1)],
         (2, 34, 34, 28), slow=True),
    _har("P44", "P_4^4(cos θ)(cos 4φ + sin 4φ)", [(4, 4, 1, 1)],
         (2, 34, 34, 34), slow=True),
)


def all_rows() -> Tuple[TableRow, ...]:
    return REVOLUTION_ROWS + HARMONIC_ROWS


def _norm(name: str) -> str:
    s = name.lower().replace("theta", "").replace("θ", "")
    s = s.replace("_", "").replace("^", "").replace("{", "").replace("}", "")
    return re.sub(r"\s+", "", s)


def select_rows(names: Sequence[str], slow_tier: bool) -> List[TableRow]:
    """Resolve row names to rows; an empty list selects the default set.

    Slow rows are included only under ``slow_tier`` unless named
    explicitly.  Unknown names raise ``KeyError``.
    """
    rows = all_rows()
    if not names:
        return [r for r in rows if slow_tier or not r.slow]
    index: Dict[str, TableRow] = {}
    for r in rows:
        index[_norm(r.key)] = r
        index.setdefault(_norm(r.label), r)
    picked = []
    for name in names:
        key = _norm(name)
        if key not in index:
            raise KeyError(f"unknown table row {name!r}")
        picked.append(index[key])
    return picked


@dataclass(frozen=True)
class ComputedRow:
    """A golden row evaluated against the degree pipeline."""

    row: TableRow
    report: DegreeReport
    computed: Tuple[int, int, int, int]
    matches: Tuple[bool, bool, bool, bool]
    wall_time: float

    @property
    def all_match(self) -> bool:
        return all(self.matches)


def compute_row(row: TableRow) -> ComputedRow:
    t0 = time.monotonic()
    rep = sendra_degrees(row.surface())
    ratios = (rep.table_ratio_x, rep.table_ratio_y, rep.table_ratio_z)
    got = (rep.map_degree,) + tuple(
        int(r) if r.denominator == 1 else -1 for r in ratios)
    matches = tuple(g == e for g, e in zip(got, row.expected))
    return ComputedRow(row, rep, got, matches, time.monotonic() - t0)
