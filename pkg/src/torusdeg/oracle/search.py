"""Exact toroidal approximation degree by offset enumeration.

A torus polynomial ``sum_j c_j b_j`` approximates ``alpha f`` within ``eps``
iff for every constraint point ``x`` there is an integer ``m_x`` with::

    alpha f(x) + m_x - eps  <=  sum_j c_j b_j(x)  <=  alpha f(x) + m_x + eps

The basis functions are integer valued on the cube, so the ``c_j`` may be
taken in ``[0, 1]``.  Once every ``m_x`` is fixed the question is a linear
feasibility problem.  The search fixes offsets depth first, choosing the
point with fewest admissible offsets (interval propagation), and exploring
offsets nearest the middle of the achievable range first.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..approx import approx_error
from ..boolean import BooleanFunction, SymmetricProfile, popcount
from ..errors import NotFoundWithin, SizeLimitExceeded
from ..polynomials import MultilinearTorusPolynomial, SymmetricTorusPolynomial
from ..torus import HALF, as_rational, frac_mod1
from .fm import fm_solve
from .lp import ExactLP

SYMMETRIC = "symmetric"
MULTILINEAR = "multilinear"
BASES = (SYMMETRIC, MULTILINEAR)

Target = Union[BooleanFunction, SymmetricProfile]


@dataclass(frozen=True)
class OracleLimits:
    max_symmetric_n: int = 16
    max_symmetric_d: int = 4
    max_multilinear_n: int = 4
    max_multilinear_d: int = 3
    max_nodes: int = 2_000_000


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class ApproximationProblem:
    target: Target
    eps: Fraction
    degree: int
    alpha: Fraction = HALF
    basis: str = SYMMETRIC

    def __post_init__(self):
        object.__setattr__(self, "eps", as_rational(self.eps))
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}")
        if self.eps < 0:
            raise ValueError("eps must be non-negative")
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if not 0 <= self.alpha <= 1:
            raise ValueError("alpha must lie in [0, 1]")
        if self.basis == SYMMETRIC and not isinstance(self.target, SymmetricProfile):
            if isinstance(self.target, BooleanFunction) and self.target.is_symmetric():
                object.__setattr__(self, "target", self.target.to_profile())
            else:
                raise ValueError("the symmetric basis needs a symmetric target")

    @property
    def n(self) -> int:
        return self.target.n

    def check_limits(self, limits: OracleLimits = DEFAULT_LIMITS):
        if self.basis == SYMMETRIC:
            max_n, max_d = limits.max_symmetric_n, limits.max_symmetric_d
        else:
            max_n, max_d = limits.max_multilinear_n, limits.max_multilinear_d
        if self.n > max_n or self.degree > max_d:
            raise SizeLimitExceeded(
                f"{self.basis} basis limited to n <= {max_n}, d <= {max_d}; got n={self.n}, d={self.degree}"
            )

    def basis_labels(self) -> list[int]:
        """Powers ``j`` (symmetric) or monomial masks (multilinear) of the basis."""
        if self.basis == SYMMETRIC:
            return list(range(self.degree + 1))
        masks = [s for s in range(1 << self.n) if popcount(s) <= self.degree]
        return sorted(masks, key=lambda s: (popcount(s), s))

    def constraints(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """``(basis values at x, alpha f(x))`` for every constraint point."""
        labels = self.basis_labels()
        if self.basis == SYMMETRIC:
            return [
                (tuple(w**j for j in labels), self.alpha * self.target.values[w]) for w in range(self.n + 1)
            ]
        f = self.target.to_function() if isinstance(self.target, SymmetricProfile) else self.target
        vals = f.values()
        return [
            (tuple(1 if s & x == s else 0 for s in labels), self.alpha * vals[x]) for x in range(1 << self.n)
        ]

    def with_degree(self, d: int) -> ApproximationProblem:
        return ApproximationProblem(self.target, self.eps, d, self.alpha, self.basis)


@dataclass(frozen=True)
class FeasibilityWitness:
    """Coefficients in ``[0, 1)`` and the integer offset used at each constraint point."""

    coefficients: tuple[Fraction, ...]
    offsets: tuple[int, ...]
    branches: int = 0
    feasible = True


@dataclass(frozen=True)
class Infeasible:
    """Proof record: the entire offset space was searched without success."""

    degree: int
    eps: Fraction
    basis: str
    branches: int
    feasible = False


def witness_polynomial(problem: ApproximationProblem, witness: FeasibilityWitness):
    labels = problem.basis_labels()
    if problem.basis == SYMMETRIC:
        coeffs = [Fraction(0)] * (max(labels) + 1)
        for j, c in zip(labels, witness.coefficients):
            coeffs[j] = c
        return SymmetricTorusPolynomial(problem.n, tuple(coeffs))
    return MultilinearTorusPolynomial(problem.n, dict(zip(labels, witness.coefficients)))


def verify_witness(problem: ApproximationProblem, witness: FeasibilityWitness) -> bool:
    """Check the offset inequalities and, independently, the torus error of the polynomial."""
    rows = problem.constraints()
    if len(witness.offsets) != len(rows) or len(witness.coefficients) != len(rows[0][0]):
        return False
    if any(not 0 <= c < 1 for c in witness.coefficients):
        return False
    for (a, t), m in zip(rows, witness.offsets):
        value = sum(ai * ci for ai, ci in zip(a, witness.coefficients))
        if abs(value - t - m) > problem.eps:
            return False
    poly = witness_polynomial(problem, witness)
    return approx_error(poly, problem.target, problem.alpha) <= problem.eps


def _canonical_witness(problem, coefficients, branches) -> FeasibilityWitness:
    coeffs = tuple(frac_mod1(c) for c in coefficients)
    offsets = []
    for a, t in problem.constraints():
        value = sum(ai * ci for ai, ci in zip(a, coeffs))
        offsets.append(math.floor(value - t + HALF))
    return FeasibilityWitness(coeffs, tuple(offsets), branches)


# ---------------------------------------------------------------------------
# the search


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, problem: ApproximationProblem, solver: str, max_nodes: int):
        self.problem = problem
        self.rows = problem.constraints()
        self.nvars = len(self.rows[0][0])
        self.eps = problem.eps
        self.solver = solver
        self.max_nodes = max_nodes
        self.nodes = 0

    # -- linear systems ------------------------------------------------------

    def _system(self, fixed: dict[int, int]):
        A, b = [], []
        for j in range(self.nvars):
            row = [0] * self.nvars
            row[j] = 1
            A.append(row)
            b.append(1)
        for i, m in fixed.items():
            a, t = self.rows[i]
            A.append(list(a))
            b.append(t + m + self.eps)
            A.append([-v for v in a])
            b.append(-(t + m - self.eps))
        return A, b

    def _point(self, fixed):
        A, b = self._system(fixed)
        if self.solver == "fm":
            return fm_solve(A, b, self.nvars)
        lp = ExactLP(A, b, self.nvars)
        return lp.point if lp.feasible else None

    def _range(self, fixed, i):
        """Exact min and max of row ``i`` over the current polytope (simplex solver only)."""
        A, b = self._system(fixed)
        lp = ExactLP(A, b, self.nvars)
        if not lp.feasible:
            return None
        a = self.rows[i][0]
        lo, _ = lp.minimize(a)
        hi, _ = lp.maximize(a)
        return lo, hi

    # -- interval propagation ------------------------------------------------

    def _propagate(self, fixed):
        """Box bounds implied by the fixed rows, or ``None`` if some row is violated."""
        lo = [Fraction(0)] * self.nvars
        hi = [Fraction(1)] * self.nvars
        bounds = []
        for i, m in fixed.items():
            a, t = self.rows[i]
            bounds.append((a, t + m - self.eps, t + m + self.eps))
        for _ in range(8):
            changed = False
            for a, rlo, rhi in bounds:
                mins = [ai * (lo[j] if ai > 0 else hi[j]) for j, ai in enumerate(a)]
                maxs = [ai * (hi[j] if ai > 0 else lo[j]) for j, ai in enumerate(a)]
                smin, smax = sum(mins), sum(maxs)
                if smin > rhi or smax < rlo:
                    return None
                for j, ai in enumerate(a):
                    if not ai:
                        continue
                    upper = (rhi - (smin - mins[j])) / ai
                    lower = (rlo - (smax - maxs[j])) / ai
                    if ai < 0:
                        upper, lower = lower, upper
                    if upper < hi[j]:
                        hi[j], changed = upper, True
                    if lower > lo[j]:
                        lo[j], changed = lower, True
                    if lo[j] > hi[j]:
                        return None
            if not changed:
                break
        return lo, hi

    def _offsets_for(self, i, vmin, vmax) -> range:
        t = self.rows[i][1]
        return range(math.ceil(vmin - t - self.eps), math.floor(vmax - t + self.eps) + 1)

    def _choose(self, fixed, box):
        lo, hi = box
        best = None
        for i, (a, _) in enumerate(self.rows):
            if i in fixed:
                continue
            vmin = sum(ai * (lo[j] if ai > 0 else hi[j]) for j, ai in enumerate(a))
            vmax = sum(ai * (hi[j] if ai > 0 else lo[j]) for j, ai in enumerate(a))
            count = len(self._offsets_for(i, vmin, vmax))
            if best is None or count < best[0]:
                best = (count, i, vmin, vmax)
                if count == 0:
                    break
        return best

    def children(self, fixed):
        """``(point index, ordered offsets)`` for the next branching step, or ``None`` to prune."""
        box = self._propagate(fixed)
        if box is None:
            return None
        count, i, vmin, vmax = self._choose(fixed, box)
        if count == 0:
            return None
        if self.solver == "simplex":
            exact = self._range(fixed, i)
            if exact is None:
                return None
            vmin, vmax = exact
        elif self._point(fixed) is None:
            return None
        offsets = list(self._offsets_for(i, vmin, vmax))
        centre = (vmin + vmax) / 2 - self.rows[i][1]
        offsets.sort(key=lambda m: (abs(m - centre), m))
        return i, offsets

    def run(self, fixed=None):
        """Depth-first search; returns coefficients or ``None``."""
        fixed = dict(fixed or {})
        return self._dfs(fixed)

    def _dfs(self, fixed):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Budget()
        if len(fixed) == len(self.rows):
            return self._point(fixed)
        step = self.children(fixed)
        if step is None:
            return None
        i, offsets = step
        for m in offsets:
            fixed[i] = m
            found = self._dfs(fixed)
            if found is not None:
                return found
            del fixed[i]
        return None


def _run_subtree(args):
    problem, solver, max_nodes, fixed = args
    search = _Search(problem, solver, max_nodes)
    try:
        found = search.run(fixed)
    except _Budget:
        return "budget", search.nodes
    return found, search.nodes


def _default_workers() -> int:
    env = os.environ.get("TORUSDEG_MAX_THREADS")
    if env:
        return max(1, int(env))
    return 1


def feasibility(
    problem: ApproximationProblem,
    limits: OracleLimits = DEFAULT_LIMITS,
    solver: str = "simplex",
    workers: int | None = None,
) -> FeasibilityWitness | Infeasible:
    """Decide exactly whether a degree-``d`` torus polynomial ``eps``-approximates ``alpha f``.

    ``solver="simplex"`` uses exact simplex ranges to generate only feasible
    children; ``solver="fm"`` uses interval propagation for the offsets and
    Fourier-Motzkin elimination for the feasibility of every node.  Both are
    exact.  With ``workers > 1`` the top-level subtrees are searched in
    separate processes; the result does not depend on scheduling.
    """
    if solver not in ("simplex", "fm"):
        raise ValueError("solver must be 'simplex' or 'fm'")
    problem.check_limits(limits)
    workers = _default_workers() if workers is None else workers
    search = _Search(problem, solver, limits.max_nodes)
    try:
        if workers <= 1:
            found = search.run()
            nodes = search.nodes
        else:
            found, nodes = _parallel(problem, solver, limits.max_nodes, search, workers)
    except _Budget:
        raise SizeLimitExceeded(f"search exceeded {limits.max_nodes} nodes") from None
    if found is None:
        return Infeasible(problem.degree, problem.eps, problem.basis, nodes)
    witness = _canonical_witness(problem, found, nodes)
    if not verify_witness(problem, witness):
        raise AssertionError("internal error: witness failed re-verification")
    return witness


def _parallel(problem, solver, max_nodes, search, workers):
    step = search.children({})
    nodes = 1
    if step is None:
        return None, nodes
    i, offsets = step
    jobs = [(problem, solver, max_nodes, {i: m}) for m in offsets]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_subtree, jobs))
    found = None
    for res, count in results:
        nodes += count
        if res == "budget":
            raise _Budget()
        if found is None and res is not None:
            found = res
    return found, nodes


# ---------------------------------------------------------------------------
# minimal degree


@dataclass(frozen=True)
class DegreeCertificate:
    d_min: int
    witness: FeasibilityWitness
    problem: ApproximationProblem
    infeasibility: Infeasible | None = None
    searched: tuple = field(default=(), compare=False)

    def polynomial(self):
        return witness_polynomial(self.problem, self.witness)


def exact_degree(
    target: Target,
    eps,
    alpha=HALF,
    basis: str = SYMMETRIC,
    d_max: int | None = None,
    limits: OracleLimits = DEFAULT_LIMITS,
    solver: str = "simplex",
    workers: int | None = None,
) -> DegreeCertificate:
    """Smallest ``d <= d_max`` with a degree-``d`` approximation, with certificates.

    ``d_max`` defaults to ``n``, where an exact representation always exists.
    """
    n = target.n
    d_max = n if d_max is None else d_max
    last_infeasible = None
    records = []
    for d in range(min(d_max, n) + 1):
        problem = ApproximationProblem(target, eps, d, alpha, basis)
        result = feasibility(problem, limits, solver, workers)
        records.append(result)
        if result.feasible:
            return DegreeCertificate(d, result, problem, last_infeasible, tuple(records))
        last_infeasible = result
    raise NotFoundWithin(d_max)
