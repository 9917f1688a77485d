"""Exact two-phase simplex over the rationals.

Solves ``max c.x  s.t.  A x <= b, x >= 0`` with :class:`fractions.Fraction`
arithmetic and Bland's rule, so it always terminates and never rounds.
Sized for the small systems produced by the offset search (tens of rows).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

_ZERO = Fraction(0)


class Unbounded(Exception):
    pass


class ExactLP:
    """Feasible region ``{x >= 0 : A x <= b}``; phase I runs on construction.

    After construction ``feasible`` tells whether the region is nonempty and
    ``point`` holds a vertex of it.  :meth:`maximize` and :meth:`minimize`
    start phase II from that vertex.
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence, nvars: int | None = None):
        self.nvars = nvars if nvars is not None else (len(A[0]) if A else 0)
        self.pivots = 0
        rows = [[Fraction(v) for v in row] for row in A]
        rhs = [Fraction(v) for v in b]
        m, nv = len(rows), self.nvars
        needs_art = [i for i in range(m) if rhs[i] < 0]
        ncols = nv + m + len(needs_art)
        self._art_start = nv + m
        tableau = []
        basis = []
        art = self._art_start
        for i in range(m):
            row = [_ZERO] * (ncols + 1)
            sign = -1 if rhs[i] < 0 else 1
            for j, v in enumerate(rows[i]):
                row[j] = sign * v
            row[nv + i] = Fraction(sign)
            row[-1] = sign * rhs[i]
            if sign < 0:
                row[art] = Fraction(1)
                basis.append(art)
                art += 1
            else:
                basis.append(nv + i)
            tableau.append(row)
        self._tableau = tableau
        self._basis = basis
        self._ncols = ncols
        self.feasible = self._phase_one()
        self.point = self._solution() if self.feasible else None

    # -- pivoting ----------------------------------------------------------

    def _pivot(self, T, basis, r: int, c: int, cost_row=None):
        self.pivots += 1
        prow = T[r]
        pv = prow[c]
        if pv != 1:
            prow[:] = [v / pv for v in prow]
        for i, row in enumerate(T):
            if i != r:
                f = row[c]
                if f:
                    row[:] = [a - f * b for a, b in zip(row, prow)]
        if cost_row is not None:
            f = cost_row[c]
            if f:
                cost_row[:] = [a - f * b for a, b in zip(cost_row, prow)]
        basis[r] = c

    def _run(self, T, basis, cost_row, allowed: int):
        """Maximize with reduced costs in ``cost_row`` (entering if positive)."""
        while True:
            enter = next((j for j in range(allowed) if cost_row[j] > 0), None)
            if enter is None:
                return
            best = None
            for i, row in enumerate(T):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise Unbounded()
            self._pivot(T, basis, best[1], enter, cost_row)

    @staticmethod
    def _reduced_costs(T, basis, costs, width):
        row = list(costs) + [_ZERO] * (width + 1 - len(costs))
        for i, bcol in enumerate(basis):
            cb = costs[bcol] if bcol < len(costs) else _ZERO
            if cb:
                row = [a - cb * b for a, b in zip(row, T[i])]
        return row

    def _phase_one(self) -> bool:
        T, basis = self._tableau, self._basis
        if self._ncols == self._art_start:
            return True
        costs = [_ZERO] * self._art_start + [Fraction(-1)] * (self._ncols - self._art_start)
        cost_row = self._reduced_costs(T, basis, costs, self._ncols)
        self._run(T, basis, cost_row, self._ncols)
        if any(bcol >= self._art_start and T[i][-1] != 0 for i, bcol in enumerate(basis)):
            return False
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(T):
            if basis[i] >= self._art_start:
                col = next((j for j in range(self._art_start) if T[i][j] != 0), None)
                if col is None:
                    del T[i]
                    del basis[i]
                    continue
                self._pivot(T, basis, i, col)
            i += 1
        for row in T:
            del row[self._art_start : self._ncols]
        self._ncols = self._art_start
        return True

    def _solution(self, T=None, basis=None) -> list[Fraction]:
        T = self._tableau if T is None else T
        basis = self._basis if basis is None else basis
        x = [_ZERO] * self.nvars
        for i, bcol in enumerate(basis):
            if bcol < self.nvars:
                x[bcol] = T[i][-1]
        return x

    # -- optimization --------------------------------------------------------

    def maximize(self, c: Sequence) -> tuple[Fraction, list[Fraction]]:
        if not self.feasible:
            raise ValueError("infeasible region")
        T = [list(row) for row in self._tableau]
        basis = list(self._basis)
        costs = [Fraction(v) for v in c] + [_ZERO] * (self._ncols - self.nvars)
        cost_row = self._reduced_costs(T, basis, costs, self._ncols)
        self._run(T, basis, cost_row, self._ncols)
        x = self._solution(T, basis)
        return sum((ci * xi for ci, xi in zip(costs, x)), _ZERO), x

    def minimize(self, c: Sequence) -> tuple[Fraction, list[Fraction]]:
        value, x = self.maximize([-Fraction(v) for v in c])
        return -value, x
