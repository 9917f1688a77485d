"""Fourier-Motzkin elimination for exact linear feasibility.

A system is a list of rows ``(a, b)`` meaning ``a . x <= b`` with rational
entries.  Redundancy is kept in check with Imbert's history test (a row
combining more than ``1 + e`` original rows is implied by the others, where
``e`` counts the variables present in those originals but absent from the
row, whether eliminated explicitly or cancelled) and by dropping rows with
all-zero left-hand side.  Parallel rows are deliberately *not* merged: the
history test assumes every combination of surviving rows is still present,
and discarding a looser parallel row breaks that.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[tuple[Fraction, ...], Fraction, frozenset]


class _Infeasible(Exception):
    pass


def _normalize(rows: list[Row]) -> list[Row]:
    """Scale rows to unit leading coefficient; drop or reject all-zero rows."""
    out: list[Row] = []
    for a, b, origin in rows:
        lead = next((abs(v) for v in a if v), None)
        if lead is None:
            if b < 0:
                raise _Infeasible()
            continue
        if lead != 1:
            a = tuple(v / lead for v in a)
            b = b / lead
        out.append((a, b, origin))
    return out


def _eliminate(rows: list[Row], var: int, supports: list[frozenset]) -> list[Row]:
    pos, neg, out = [], [], []
    for r in rows:
        v = r[0][var]
        if v > 0:
            pos.append(r)
        elif v < 0:
            neg.append(r)
        else:
            out.append(r)
    for ap, bp, op in pos:
        for an, bn, on in neg:
            origin = op | on
            cp, cn = ap[var], -an[var]
            a = tuple(cn * x + cp * y for x, y in zip(ap, an))
            if len(origin) > 2:
                present = frozenset().union(*(supports[i] for i in origin))
                gone = sum(1 for j in present if not a[j])
                if len(origin) > gone + 1:
                    continue
            out.append((a, cn * bp + cp * bn, origin))
    return _normalize(out)


def _choose_variable(rows: list[Row], remaining: list[int]) -> int:
    def cost(var):
        p = sum(1 for r in rows if r[0][var] > 0)
        n = sum(1 for r in rows if r[0][var] < 0)
        return (p * n - p - n, var)

    return min(remaining, key=cost)


def fm_solve(A: Sequence[Sequence], b: Sequence, nvars: int | None = None) -> list[Fraction] | None:
    """A point with ``A x <= b``, or ``None`` if the system is infeasible.

    Bounded systems only: every variable must be bounded on both sides by
    the rows (the oracle always adds the box ``0 <= x <= 1``).
    """
    nvars = nvars if nvars is not None else (len(A[0]) if A else 0)
    rows: list[Row] = [
        (tuple(Fraction(v) for v in a), Fraction(bi), frozenset([i])) for i, (a, bi) in enumerate(zip(A, b))
    ]
    supports = [frozenset(j for j, v in enumerate(r[0]) if v) for r in rows]
    try:
        rows = _normalize(rows)
        stages: list[tuple[int, list[Row]]] = []
        remaining = list(range(nvars))
        while remaining:
            var = _choose_variable(rows, remaining)
            stages.append((var, rows))
            rows = _eliminate(rows, var, supports)
            remaining.remove(var)
    except _Infeasible:
        return None

    x = [Fraction(0)] * nvars
    for var, system in reversed(stages):
        lo, hi = None, None
        for a, bi, _ in system:
            coef = a[var]
            if not coef:
                continue
            rest = bi - sum(a[j] * x[j] for j in range(nvars) if j != var and a[j])
            bound = rest / coef
            if coef > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            x[var] = (lo + hi) / 2
        elif lo is not None:
            x[var] = lo
        elif hi is not None:
            x[var] = hi
    return x
