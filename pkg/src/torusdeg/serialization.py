"""JSON file formats.

Every object is written as canonical JSON (sorted keys, two-space indent,
trailing newline) so that writing, reading and writing again reproduces
the same bytes.  Rationals are always ``"num/den"`` strings; integer
coefficients use the same form with denominator 1.

Polynomials::

    {"kind": "multilinear", "n": 3, "terms": [{"vars": [1, 3], "coeff": "1/2"}]}
    {"kind": "symmetric",   "n": 3, "terms": [{"power": 1, "coeff": "1/2"}]}
    {"kind": "field", "p": 3, "n": 2, "terms": [{"vars": [1], "coeff": "2/1"}]}
    {"kind": "integer", "n": 1, "terms": [{"vars": [1, 1], "coeff": "3/1"}]}
    {"kind": "nonclassical", "n": 2, "shift": "1/4", "degree": 3,
     "terms": [{"vars": [1], "k": 1, "coeff": "1/4"}]}

For ``integer`` polynomials ``vars`` is a sorted multiset, so ``x_1^2`` is
``[1, 1]``.  A nonclassical term stores the bit ``c_{S,k} = 1``; its
``coeff`` is always ``1/2^(k+1)`` and is checked on reading.

Boolean functions are ``{"kind": "table", "n", "hex"}`` (little-endian
truth table, ``x_1`` least significant) or ``{"kind": "profile", "n",
"bits"}`` (``b_0 ... b_n``).
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from pathlib import Path
from typing import Any

from .boolean import BooleanFunction, SymmetricProfile
from .constructions.acc import AccCertificate
from .constructions.distribution import PolynomialDistribution
from .errors import MalformedInput
from .oracle.search import (
    ApproximationProblem,
    DegreeCertificate,
    FeasibilityWitness,
    Infeasible,
    witness_polynomial,
)
from .polynomials import (
    FieldPolynomial,
    IntegerPolynomial,
    MultilinearTorusPolynomial,
    NonclassicalPolynomial,
    SymmetricTorusPolynomial,
    mask_variables,
    subset_mask,
)
from .torus import format_rational, parse_rational

POLYNOMIAL_KINDS = ("multilinear", "symmetric", "field", "integer", "nonclassical")
FUNCTION_KINDS = ("table", "profile")


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(path, obj: dict):
    Path(path).write_text(dumps(obj))


def read_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(obj, dict):
        raise MalformedInput(f"{path}: top level must be a JSON object")
    return obj


# ---------------------------------------------------------------------------
# field access with uniform error messages


def _get(obj: dict, key: str, kind=None):
    if not isinstance(obj, dict):
        raise MalformedInput(f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise MalformedInput(f"missing field {key!r}")
    value = obj[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise MalformedInput(f"field {key!r} must be an integer")
    if kind is not None and kind is not int and not isinstance(value, kind):
        raise MalformedInput(f"field {key!r} must be {kind.__name__}")
    return value


def _rational(obj: dict, key: str) -> Fraction:
    return parse_rational(_get(obj, key, str))


def _integer_coeff(obj: dict) -> int:
    c = _rational(obj, "coeff")
    if c.denominator != 1:
        raise MalformedInput(f"coefficient {obj['coeff']!r} must be an integer")
    return c.numerator


def _vars(term: dict, multiset: bool = False) -> list[int]:
    vs = _get(term, "vars", list)
    if any(isinstance(v, bool) or not isinstance(v, int) for v in vs):
        raise MalformedInput("variable labels must be integers")
    if vs != sorted(vs) or (not multiset and len(set(vs)) != len(vs)):
        raise MalformedInput(f"variable list {vs} must be sorted{'' if multiset else ' and distinct'}")
    return vs


def _check_kind(obj: dict, *kinds: str) -> str:
    kind = _get(obj, "kind", str)
    if kind not in kinds:
        raise MalformedInput(f"expected kind in {kinds}, got {kind!r}")
    return kind


# ---------------------------------------------------------------------------
# polynomials


def polynomial_to_json(poly) -> dict:
    if isinstance(poly, MultilinearTorusPolynomial):
        terms = [{"vars": mask_variables(s), "coeff": format_rational(c)} for s, c in poly.terms.items()]
        return {"kind": "multilinear", "n": poly.n, "terms": terms}
    if isinstance(poly, SymmetricTorusPolynomial):
        terms = [{"power": j, "coeff": format_rational(c)} for j, c in enumerate(poly.coeffs) if c]
        return {"kind": "symmetric", "n": poly.n, "terms": terms}
    if isinstance(poly, FieldPolynomial):
        terms = [{"vars": mask_variables(s), "coeff": format_rational(c)} for s, c in poly.terms.items()]
        return {"kind": "field", "p": poly.p, "n": poly.n, "terms": terms}
    if isinstance(poly, IntegerPolynomial):
        terms = []
        for exps, c in poly.terms.items():
            vs = [i + 1 for i, a in enumerate(exps) for _ in range(a)]
            terms.append({"vars": vs, "coeff": format_rational(c)})
        terms.sort(key=lambda t: (len(t["vars"]), t["vars"]))
        return {"kind": "integer", "n": poly.n, "terms": terms}
    if isinstance(poly, NonclassicalPolynomial):
        terms = [
            {"vars": mask_variables(s), "k": k, "coeff": format_rational(Fraction(1, 2 ** (k + 1)))}
            for s, k in sorted(poly.bits)
        ]
        return {
            "kind": "nonclassical",
            "n": poly.n,
            "shift": format_rational(poly.shift.value),
            "degree": poly.degree_bound,
            "terms": terms,
        }
    raise TypeError(f"cannot serialize {type(poly).__name__}")


def polynomial_from_json(obj: dict):
    kind = _check_kind(obj, *POLYNOMIAL_KINDS)
    n = _get(obj, "n", int)
    if n < 0:
        raise MalformedInput("n must be non-negative")
    terms = _get(obj, "terms", list)
    if kind == "multilinear":
        out: dict[int, Fraction] = {}
        for t in terms:
            s = subset_mask(_vars(t), n)
            out[s] = out.get(s, Fraction(0)) + _rational(t, "coeff")
        return MultilinearTorusPolynomial(n, out)
    if kind == "symmetric":
        coeffs: dict[int, Fraction] = {}
        for t in terms:
            j = _get(t, "power", int)
            if j < 0:
                raise MalformedInput("power must be non-negative")
            coeffs[j] = coeffs.get(j, Fraction(0)) + _rational(t, "coeff")
        dense = [coeffs.get(j, Fraction(0)) for j in range(max(coeffs, default=-1) + 1)]
        return SymmetricTorusPolynomial(n, tuple(dense))
    if kind == "field":
        p = _get(obj, "p", int)
        residues: dict[int, int] = {}
        for t in terms:
            s = subset_mask(_vars(t), n)
            residues[s] = residues.get(s, 0) + _integer_coeff(t)
        try:
            return FieldPolynomial(p, n, residues)
        except ValueError as exc:
            if isinstance(exc, MalformedInput):
                raise
            raise MalformedInput(str(exc)) from None
    if kind == "integer":
        ints: dict[tuple[int, ...], int] = {}
        for t in terms:
            vs = _vars(t, multiset=True)
            subset_mask(set(vs), n)  # range check
            counts = Counter(vs)
            exps = tuple(counts.get(i + 1, 0) for i in range(n))
            ints[exps] = ints.get(exps, 0) + _integer_coeff(t)
        return IntegerPolynomial(n, ints)
    # nonclassical
    bits = set()
    for t in terms:
        s = subset_mask(_vars(t), n)
        k = _get(t, "k", int)
        if k < 0:
            raise MalformedInput("bit position k must be non-negative")
        if "coeff" in t and _rational(t, "coeff") != Fraction(1, 2 ** (k + 1)):
            raise MalformedInput(f"nonclassical term with k={k} must have coeff 1/{2 ** (k + 1)}")
        bits.add((s, k))
    try:
        return NonclassicalPolynomial(n, _rational(obj, "shift"), frozenset(bits), _get(obj, "degree", int))
    except ValueError as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput(str(exc)) from None


# ---------------------------------------------------------------------------
# Boolean functions


def function_to_json(f) -> dict:
    if isinstance(f, BooleanFunction):
        return {"kind": "table", "n": f.n, "hex": f.to_hex()}
    if isinstance(f, SymmetricProfile):
        return {"kind": "profile", "n": f.n, "bits": f.bits}
    raise TypeError(f"cannot serialize {type(f).__name__}")


def function_from_json(obj: dict):
    kind = _check_kind(obj, *FUNCTION_KINDS)
    n = _get(obj, "n", int)
    if kind == "table":
        return BooleanFunction.from_hex(n, _get(obj, "hex", str))
    bits = _get(obj, "bits", str)
    profile = SymmetricProfile.from_bits(bits)
    if profile.n != n:
        raise MalformedInput(f"profile has {len(bits)} bits, expected n + 1 = {n + 1}")
    return profile


# ---------------------------------------------------------------------------
# construction inputs


def certificate_to_json(cert: AccCertificate) -> dict:
    return {
        "kind": "acc-certificate",
        "F": polynomial_to_json(cert.F),
        "k": cert.k,
        "e": cert.e,
        "depth": cert.depth,
        "f": function_to_json(cert.f),
    }


def certificate_from_json(obj: dict) -> AccCertificate:
    if "kind" in obj:
        _check_kind(obj, "acc-certificate")
    F = polynomial_from_json(_get(obj, "F", dict))
    if not isinstance(F, IntegerPolynomial):
        raise MalformedInput("certificate polynomial F must be of kind 'integer'")
    f = function_from_json(_get(obj, "f", dict))
    if isinstance(f, SymmetricProfile):
        f = f.to_function()
    return AccCertificate(F, _get(obj, "k", int), _get(obj, "e", int), _get(obj, "depth", int), f)


def distribution_to_json(nu: PolynomialDistribution) -> dict:
    entries = [{"poly": polynomial_to_json(F), "prob": format_rational(pr)} for F, pr in nu.entries]
    return {"kind": "distribution", "entries": entries}


def distribution_from_json(obj: dict) -> PolynomialDistribution:
    _check_kind(obj, "distribution")
    entries = []
    for e in _get(obj, "entries", list):
        F = polynomial_from_json(_get(e, "poly", dict))
        if not isinstance(F, FieldPolynomial):
            raise MalformedInput("distribution entries must be of kind 'field'")
        entries.append((F, _rational(e, "prob")))
    return PolynomialDistribution(tuple(entries))


# ---------------------------------------------------------------------------
# oracle problems and certificates


def problem_to_json(problem: ApproximationProblem) -> dict:
    return {
        "kind": "problem",
        "target": function_to_json(problem.target),
        "eps": format_rational(problem.eps),
        "alpha": format_rational(problem.alpha),
        "degree": problem.degree,
        "basis": problem.basis,
    }


def problem_from_json(obj: dict) -> ApproximationProblem:
    _check_kind(obj, "problem")
    try:
        return ApproximationProblem(
            function_from_json(_get(obj, "target", dict)),
            _rational(obj, "eps"),
            _get(obj, "degree", int),
            _rational(obj, "alpha"),
            _get(obj, "basis", str),
        )
    except ValueError as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput(str(exc)) from None


def witness_to_json(w: FeasibilityWitness) -> dict:
    return {
        "coefficients": [format_rational(c) for c in w.coefficients],
        "offsets": list(w.offsets),
        "branches": w.branches,
    }


def witness_from_json(obj: dict) -> FeasibilityWitness:
    coeffs = tuple(parse_rational(c) for c in _get(obj, "coefficients", list))
    offsets = _get(obj, "offsets", list)
    if any(isinstance(m, bool) or not isinstance(m, int) for m in offsets):
        raise MalformedInput("offsets must be integers")
    return FeasibilityWitness(coeffs, tuple(offsets), _get(obj, "branches", int))


def infeasible_to_json(r: Infeasible) -> dict:
    return {"degree": r.degree, "eps": format_rational(r.eps), "basis": r.basis, "branches": r.branches}


def infeasible_from_json(obj: dict) -> Infeasible:
    return Infeasible(_get(obj, "degree", int), _rational(obj, "eps"), _get(obj, "basis", str), _get(obj, "branches", int))


def degree_certificate_to_json(cert: DegreeCertificate) -> dict:
    return {
        "kind": "degree-certificate",
        "d_min": cert.d_min,
        "problem": problem_to_json(cert.problem),
        "witness": witness_to_json(cert.witness),
        "infeasibility": None if cert.infeasibility is None else infeasible_to_json(cert.infeasibility),
        "polynomial": polynomial_to_json(witness_polynomial(cert.problem, cert.witness)),
    }


def degree_certificate_from_json(obj: dict) -> DegreeCertificate:
    _check_kind(obj, "degree-certificate")
    problem = problem_from_json(_get(obj, "problem", dict))
    infeas = obj.get("infeasibility")
    return DegreeCertificate(
        _get(obj, "d_min", int),
        witness_from_json(_get(obj, "witness", dict)),
        problem,
        None if infeas is None else infeasible_from_json(infeas),
    )


# ---------------------------------------------------------------------------
# dispatch


def to_json(obj: Any) -> dict:
    if isinstance(obj, (BooleanFunction, SymmetricProfile)):
        return function_to_json(obj)
    if isinstance(obj, AccCertificate):
        return certificate_to_json(obj)
    if isinstance(obj, PolynomialDistribution):
        return distribution_to_json(obj)
    if isinstance(obj, ApproximationProblem):
        return problem_to_json(obj)
    if isinstance(obj, DegreeCertificate):
        return degree_certificate_to_json(obj)
    return polynomial_to_json(obj)


def from_json(obj: dict):
    """Read any object written by :func:`to_json`, dispatching on ``kind``."""
    kind = _get(obj, "kind", str)
    if kind in POLYNOMIAL_KINDS:
        return polynomial_from_json(obj)
    if kind in FUNCTION_KINDS:
        return function_from_json(obj)
    readers = {
        "acc-certificate": certificate_from_json,
        "distribution": distribution_from_json,
        "problem": problem_from_json,
        "degree-certificate": degree_certificate_from_json,
    }
    if kind not in readers:
        raise MalformedInput(f"unknown kind {kind!r}")
    return readers[kind](obj)


def load(path):
    return from_json(read_json(path))


def save(path, obj):
    write_json(path, to_json(obj))
