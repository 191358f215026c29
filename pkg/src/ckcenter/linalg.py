"""Sparse exact linear algebra over the rationals.

Rows are dicts mapping column index to a nonzero Fraction.  The pivot table
built by repeated insertion is a reduced row echelon form, which is unique
for a given row space, so nullspace bases and span tests come out the same
no matter what order rows arrive in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = dict[int, Fraction]

_ONE = Fraction(1)


def _as_row(entries) -> Row:
    if isinstance(entries, dict):
        return {c: Fraction(v) for c, v in entries.items() if v}
    return {c: Fraction(v) for c, v in enumerate(entries) if v}


def _eliminate(row: Row, pivots: dict[int, Row]) -> Row:
    """Subtract pivot rows to clear every pivot column from the row.

    Stored pivot rows carry no pivot column besides their own, so one pass
    over the shared columns is complete: the subtractions only introduce
    entries in free columns.
    """
    r = dict(row)
    for c in sorted(set(r) & set(pivots)):
        f = r.get(c)
        if not f:
            continue
        for cc, vv in pivots[c].items():
            nv = r.get(cc, 0) - f * vv
            if nv:
                r[cc] = nv
            else:
                r.pop(cc, None)
    return r


def _insert(row: Row, pivots: dict[int, Row]) -> bool:
    """Add one row to the RREF pivot table; False if it was dependent."""
    r = _eliminate(row, pivots)
    if not r:
        return False
    c = min(r)
    inv = _ONE / r[c]
    r = {cc: vv * inv for cc, vv in r.items()}
    for pr in pivots.values():
        f = pr.get(c)
        if f:
            for cc, vv in r.items():
                nv = pr.get(cc, 0) - f * vv
                if nv:
                    pr[cc] = nv
                else:
                    pr.pop(cc, None)
    pivots[c] = r
    return True


def nullspace(rows: Iterable[Row], ncols: int) -> list[list[Fraction]]:
    """Canonical basis of {x : Ax = 0}: one vector per free column, with a 1
    in the free position and pivot entries read off the RREF."""
    pivots: dict[int, Row] = {}
    for row in rows:
        _insert(_as_row(row), pivots)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = _ONE
        for pc, pr in pivots.items():
            vv = pr.get(free)
            if vv:
                vec[pc] = -vv
        basis.append(vec)
    return basis


def rank(vectors: Iterable[Sequence[Fraction] | Row]) -> int:
    pivots: dict[int, Row] = {}
    count = 0
    for vec in vectors:
        if _insert(_as_row(vec), pivots):
            count += 1
    return count


def in_span(vectors: Iterable[Sequence[Fraction] | Row], target: Sequence[Fraction] | Row) -> bool:
    pivots: dict[int, Row] = {}
    for vec in vectors:
        _insert(_as_row(vec), pivots)
    return not _eliminate(_as_row(target), pivots)
