"""Command-line front end: ``torusdeg <subcommand> ...``.

Exit codes::

    0  success
    1  verification failed (error above eps, bad certificate, sampling
       failure, no feasible degree within the range)
    2  usage error
    3  size limit exceeded
    4  malformed input file or value
    5  dimension mismatch
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import serialization as ser
from .approx import approx_error, sup_distance
from .boolean import (
    BooleanFunction,
    SymmetricProfile,
    and_function,
    constant,
    delta,
    delta_at_least,
    majority,
    parity,
)
from .constructions import (
    acc_lift,
    compose_distribution,
    delta_construction,
    delta_parameters,
    force_boolean_range,
    lift_field_polynomial,
    majority_to_delta,
    majority_to_threshold,
    modulus_amplifier,
    nonclassical_round,
    rounding_error_bound,
)
from .constructions.distribution import DEFAULT_RETRIES, PolynomialDistribution
from .errors import (
    CertificateViolation,
    DimensionMismatch,
    MalformedInput,
    NotFoundWithin,
    SamplingFailed,
    SizeLimitExceeded,
)
from .oracle import OracleLimits, counting_lower_bound, exact_degree
from .oracle.search import BASES, SYMMETRIC
from .polynomials import FieldPolynomial, IntegerPolynomial, MultilinearTorusPolynomial, SymmetricTorusPolynomial
from .torus import HALF, format_decimal, format_rational, parse_rational

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_LIMIT, EXIT_MALFORMED, EXIT_DIMENSION = 0, 1, 2, 3, 4, 5


class _VerificationFailed(Exception):
    pass


def rational_arg(text: str) -> Fraction:
    """argparse type for exact rationals; ``0.25`` is refused."""
    try:
        return parse_rational(text)
    except MalformedInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def rational_list(text: str) -> list[Fraction]:
    return [rational_arg(t) for t in text.split(",") if t.strip()]


def int_list(text: str) -> list[int]:
    """``"8,16"`` or a range ``"2-6"`` (inclusive), or a mix of both."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part[1:]:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None
    return out


_NAMED_TARGETS = {
    "delta": (2, delta),
    "delta-ge": (2, delta_at_least),
    "maj": (1, majority),
    "parity": (1, parity),
    "and": (1, and_function),
    "zero": (1, lambda n: constant(n, 0)),
    "one": (1, lambda n: constant(n, 1)),
}


def load_target(text: str):
    """A Boolean function from a JSON file, or from a short name.

    Short names: ``delta:N:W``, ``delta-ge:N:W``, ``maj:N``, ``parity:N``,
    ``and:N``, ``zero:N``, ``one:N``, ``profile:BITS``, ``table:N:HEX``.
    """
    if Path(text).is_file():
        obj = ser.load(text)
        if not isinstance(obj, (BooleanFunction, SymmetricProfile)):
            raise MalformedInput(f"{text}: expected a Boolean function file")
        return obj
    name, _, rest = text.partition(":")
    args = rest.split(":") if rest else []
    if name == "profile" and len(args) == 1:
        return SymmetricProfile.from_bits(args[0])
    if name == "table" and len(args) == 2:
        return BooleanFunction.from_hex(_int(args[0]), args[1])
    if name in _NAMED_TARGETS and len(args) == _NAMED_TARGETS[name][0]:
        return _NAMED_TARGETS[name][1](*(_int(a) for a in args))
    raise MalformedInput(f"not a target file or known target name: {text!r}")


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MalformedInput(f"expected an integer, got {text!r}") from None


def _load_kind(path: str, *types):
    obj = ser.load(path)
    if types and not isinstance(obj, types):
        names = ", ".join(t.__name__ for t in types)
        raise MalformedInput(f"{path}: expected {names}, found {type(obj).__name__}")
    return obj


def _emit(args, obj):
    """Write ``obj`` to ``--out`` (or stdout when no file was requested)."""
    if args.out:
        ser.save(args.out, obj)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(ser.dumps(ser.to_json(obj)))


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct_delta(args):
    Q = delta_construction(args.n, args.w, args.eps)
    params = delta_parameters(args.n, args.eps)
    print(f"primes: {params.t}  nominal degree: {params.nominal_degree}  degree: {Q.degree}", file=sys.stderr)
    _emit(args, Q)
    _check_error(approx_error(Q, delta(args.n, args.w)), args.eps)


def _check_error(err, bound):
    """Report the verified error on stderr (stdout may carry JSON); fail above ``bound``."""
    print(f"error: {format_rational(err)} (~{format_decimal(err)})  bound: {format_rational(bound)}", file=sys.stderr)
    if err > bound:
        raise _VerificationFailed(f"error {format_rational(err)} exceeds {format_rational(bound)}")


def cmd_amplify(args):
    _emit(args, modulus_amplifier(args.k))


def cmd_lift(args):
    F = _load_kind(args.poly, FieldPolynomial)
    if args.force_range:
        F = force_boolean_range(F)
    P = lift_field_polynomial(F, args.alpha, args.eps)
    f = BooleanFunction.from_values(F.n, F.values())
    _emit(args, P)
    _check_error(approx_error(P, f, args.alpha), args.eps)


def cmd_compose(args):
    nu = _load_kind(args.dist, PolynomialDistribution)
    f = load_target(args.target)
    if isinstance(f, SymmetricProfile):
        f = f.to_function()
    P = compose_distribution(nu, f, args.eps, args.m, args.seed, args.retries)
    _emit(args, P)
    _check_error(approx_error(P, f), 3 * args.eps)


def cmd_round_nonclassical(args):
    P = _load_kind(args.poly, MultilinearTorusPolynomial)
    Q = nonclassical_round(P, args.t)
    _emit(args, Q)
    _check_error(sup_distance(P, Q.to_multilinear()), rounding_error_bound(P.n, P.degree, args.t))


def cmd_acc_lift(args):
    cert = ser.certificate_from_json(ser.read_json(args.cert))
    P = acc_lift(cert)
    _emit(args, P)
    _check_error(approx_error(P, cert.f), Fraction(1, 2**cert.e))


def cmd_reduce_majority(args):
    Q = _load_kind(args.poly, SymmetricTorusPolynomial)
    if Q.n != 2 * args.n + 1:
        raise DimensionMismatch(f"expected a polynomial on 2n+1 = {2 * args.n + 1} variables, got n={Q.n}")
    if not 0 <= args.w <= args.n:
        raise MalformedInput(f"w must lie in [0, {args.n}]")
    if args.threshold:
        _emit(args, majority_to_threshold(Q, args.n, args.w))
    else:
        _emit(args, majority_to_delta(Q, args.n, args.w))


def cmd_verify(args):
    P = ser.load(args.poly)
    if isinstance(P, (FieldPolynomial, IntegerPolynomial)):
        raise MalformedInput(f"{args.poly}: verify needs a torus polynomial, found kind {type(P).__name__}")
    f = load_target(args.target)
    err = approx_error(P, f, args.alpha)
    print(f"error: {format_rational(err)}")
    print(f"decimal: {format_decimal(err)}")
    if args.eps is not None:
        ok = err <= args.eps
        print(f"eps: {format_rational(args.eps)} {'ok' if ok else 'FAILED'}")
        if not ok:
            raise _VerificationFailed(f"error exceeds eps = {format_rational(args.eps)}")


def cmd_degree(args):
    f = load_target(args.target)
    base = OracleLimits()
    if args.basis == SYMMETRIC:
        limits = OracleLimits(
            args.max_n if args.max_n is not None else base.max_symmetric_n,
            args.max_d if args.max_d is not None else base.max_symmetric_d,
            base.max_multilinear_n, base.max_multilinear_d, args.max_nodes,
        )
    else:
        limits = OracleLimits(
            base.max_symmetric_n, base.max_symmetric_d,
            args.max_n if args.max_n is not None else base.max_multilinear_n,
            args.max_d if args.max_d is not None else base.max_multilinear_d, args.max_nodes,
        )
    cert = exact_degree(f, args.eps, args.alpha, args.basis, args.d_max, limits, args.solver, args.workers)
    branches = cert.infeasibility.branches if cert.infeasibility else 0
    print(f"d_min: {cert.d_min}", file=sys.stderr)
    if cert.infeasibility:
        print(f"degree {cert.d_min - 1} exhausted after {branches} branches", file=sys.stderr)
    if args.out:
        ser.save(args.out, cert)
        print(f"wrote {args.out}")
    print(f"d_min: {cert.d_min}")


def cmd_counting_bound(args):
    for n in args.n:
        if n < 1:
            raise MalformedInput("n must be >= 1")
        print(counting_lower_bound(n) if len(args.n) == 1 else f"{n} {counting_lower_bound(n)}")


def cmd_sweep(args):
    from .sweep import SweepConfig, run_sweep

    config = SweepConfig(
        construction=args.construction,
        n_values=tuple(args.n),
        w_values=None if args.w is None else tuple(args.w),
        eps_values=tuple(args.eps),
        oracle=args.oracle,
        oracle_limits=OracleLimits(max_symmetric_n=args.max_n, max_symmetric_d=args.max_d),
        out_dir=Path(args.out_dir),
    )
    report = run_sweep(config, workers=args.workers)
    print(f"wrote {report.csv_path} and {report.json_path} ({len(report.rows)} rows)")
    bad = [r for r in report.rows if not r.accepted]
    if bad:
        raise _VerificationFailed(f"{len(bad)} rows exceed their eps")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torusdeg", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for every randomized step (default 0)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if name not in ("counting-bound", "verify", "sweep", "degree"):
            p.add_argument("--out", "-o", help="output JSON file (default: stdout)")
        return p

    p = command("construct-delta", cmd_construct_delta, "symmetric approximation of a delta function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--eps", type=rational_arg, required=True)

    p = command("amplify", cmd_amplify, "modulus-amplifying polynomial A_k")
    p.add_argument("--k", type=int, required=True)

    p = command("lift", cmd_lift, "lift a Boolean-valued F_p polynomial to the torus")
    p.add_argument("--poly", required=True, help="field polynomial JSON")
    p.add_argument("--alpha", type=rational_arg, default=HALF)
    p.add_argument("--eps", type=rational_arg, required=True)
    p.add_argument("--force-range", action="store_true", help="replace F by F^(p-1) first")

    p = command("compose", cmd_compose, "single polynomial from a distribution of F_p polynomials")
    p.add_argument("--dist", required=True, help="distribution JSON")
    p.add_argument("--target", required=True)
    p.add_argument("--eps", type=rational_arg, required=True)
    p.add_argument("--m", type=int, default=None, help="sample size (default ceil(4n/eps^2))")
    p.add_argument("--retries", type=int, default=DEFAULT_RETRIES)

    p = command("round-nonclassical", cmd_round_nonclassical, "dyadic rounding to a nonclassical polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--t", type=int, required=True)

    p = command("acc-lift", cmd_acc_lift, "torus polynomial from a certified integer polynomial")
    p.add_argument("--cert", required=True)

    p = command("reduce-majority", cmd_reduce_majority, "delta approximation from a majority approximation")
    p.add_argument("--poly", required=True, help="symmetric polynomial on 2n+1 variables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--threshold", action="store_true", help="output the threshold polynomial instead")

    p = command("verify", cmd_verify, "exact approximation error of a polynomial file")
    p.add_argument("--poly", required=True)
    p.add_argument("--target", required=True, help="function JSON or name such as delta:8:3")
    p.add_argument("--alpha", type=rational_arg, default=HALF)
    p.add_argument("--eps", type=rational_arg, default=None, help="fail (exit 1) above this error")

    p = command("degree", cmd_degree, "exact minimal approximation degree on a small instance")
    p.add_argument("--target", required=True)
    p.add_argument("--eps", type=rational_arg, required=True)
    p.add_argument("--alpha", type=rational_arg, default=HALF)
    p.add_argument("--basis", choices=BASES, default=SYMMETRIC)
    p.add_argument("--max-n", type=int, default=None, help="cap on n for the chosen basis")
    p.add_argument("--max-d", type=int, default=None, help="cap on d for the chosen basis")
    p.add_argument("--max-nodes", type=int, default=OracleLimits().max_nodes)
    p.add_argument("--d-max", type=int, default=None, help="largest degree to try (default n)")
    p.add_argument("--solver", choices=("simplex", "fm"), default="simplex")
    p.add_argument("--workers", type=int, default=None, help="default: TORUSDEG_MAX_THREADS or 1")
    p.add_argument("--out", "-o", help="certificate JSON file")

    p = command("counting-bound", cmd_counting_bound, "degree lower bound from the counting argument")
    p.add_argument("--n", type=int_list, required=True, help="one value, a list or a range like 64-128")

    p = command("sweep", cmd_sweep, "tabulate constructions over a parameter grid")
    p.add_argument("--construction", choices=("delta",), default="delta")
    p.add_argument("--n", type=int_list, required=True)
    p.add_argument("--w", type=int_list, default=None, help="weights (default: all 0..n)")
    p.add_argument("--eps", type=rational_list, required=True, help="comma separated, e.g. 1/2,1/4")
    p.add_argument("--oracle", action="store_true", help="also compute the exact degree where within caps")
    p.add_argument("--max-n", type=int, default=OracleLimits().max_symmetric_n)
    p.add_argument("--max-d", type=int, default=OracleLimits().max_symmetric_d)
    p.add_argument("--workers", type=int, default=None, help="default: TORUSDEG_MAX_THREADS or CPU count")
    p.add_argument("--out-dir", required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args.func(args)
    except (_VerificationFailed, CertificateViolation, SamplingFailed, NotFoundWithin) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except SizeLimitExceeded as exc:
        print(f"size limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except DimensionMismatch as exc:
        print(f"dimension mismatch: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except MalformedInput as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"invalid argument: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
