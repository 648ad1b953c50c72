"""
Batch command-line frontend.

Every subcommand runs one library capability and prints a single JSON
report on stdout. Logs go to stderr. Exit codes: 0 pass, 1 fail,
2 usage error, 3 not found below the search bound.
"""

import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from fundamental_pairs.cli.records import (
    USAGE_EXIT_CODE,
    CertificateRecord,
    PairRecord,
    PointFile,
    Report,
    Status,
    text,
)
from fundamental_pairs.config import config
from fundamental_pairs.core.parser import parse_rational, poly_parse
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.derivations.nilpotency import exp_apply, nilpotency_degree
from fundamental_pairs.exceptions import FundamentalPairsError, PreconditionError, RelationViolationError
from fundamental_pairs.grading.component import component
from fundamental_pairs.grading.counting import cayley_sylvester, hermite_check
from fundamental_pairs.grading.criterion import (
    Certificate,
    criterion,
    quartic_birational_witness,
    verify_named_certificates,
)
from fundamental_pairs.grading.kernel import kernel_basis
from fundamental_pairs.logging_config import configure_logging
from fundamental_pairs.models.checks import (
    check_certificate,
    check_invariance,
    check_shear,
    check_sl2_mod_ideal,
)
from fundamental_pairs.models.instances import ModelInstance, build_cm, build_cm_rank2, build_quiver
from fundamental_pairs.sl2.covariants import binary_cubic_covariants
from fundamental_pairs.sl2.decomposition import isotypic_decompose
from fundamental_pairs.sl2.pair import FundamentalPair, basic_pair, check_relations, direct_sum
from fundamental_pairs.sl2.reduction import SqfreeDecomposition, beta_decompose, gamma_reduce
from fundamental_pairs.sl2.witness import compatibility_tree, useful2_witness

logger = logging.getLogger(__name__)

MODEL_CHOICES = ("vd", "sum", "cm", "cm-rank2", "quiver")
MATRIX_MODELS = ("cm", "cm-rank2", "quiver")
SUM_PREFIXES = "xyzuvw"
SUITES = ("d3", "v3v3", "v4v4", "d4")

Outcome = Tuple[Dict[str, Any], Status]


def _rationals(value: str) -> List[Fraction]:
    return [parse_rational(part) for part in value.split(",") if part.strip()]


def _integers(value: str) -> List[int]:
    return [int(part) for part in value.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", choices=MODEL_CHOICES, default="vd")
    common.add_argument("--d", type=int, help="dimension parameter of V_d")
    common.add_argument("--dims", type=_integers, help="comma-separated d values for --model sum")
    common.add_argument("--m", type=int, help="number of quiver vertices")
    common.add_argument("--n", type=int, help="matrix size")
    common.add_argument("--tau", type=parse_rational, default=Fraction(0))
    common.add_argument("--lambda", dest="lam", type=_rationals, help="comma-separated rationals")
    common.add_argument("--bound", type=int, help="degree bound of searches")
    common.add_argument("--degree", type=int)
    common.add_argument("--weight", type=int)
    common.add_argument("--power", type=int, default=1)
    common.add_argument("--which", choices=("D", "U"), default="D")
    common.add_argument("--t", type=parse_rational, default=Fraction(1), help="flow time")
    common.add_argument("--poly", help="polynomial text, e.g. '2*x0*x2 - x1^2'")
    common.add_argument("--mode", choices=("groebner", "points"))
    common.add_argument("--points", help="JSON point file")
    common.add_argument("--suite", choices=SUITES)
    common.add_argument("--log-level", default=None)

    parser = argparse.ArgumentParser(
        prog="fundamental-pairs",
        description="Exact checks for sl2 fundamental pairs of locally nilpotent derivations",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, handler in COMMANDS.items():
        command = sub.add_parser(name, parents=[common], help=handler.__doc__)
        command.set_defaults(handler=handler)
    return parser


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise PreconditionError(f"{args.command} needs {', '.join(missing)}")


def _model(args: argparse.Namespace) -> ModelInstance:
    if args.model == "cm":
        _require(args, "n")
        return build_cm(args.n)
    if args.model == "cm-rank2":
        _require(args, "n")
        return build_cm_rank2(args.n, args.tau)
    if args.model == "quiver":
        _require(args, "m", "n")
        return build_quiver(args.m, args.n, args.lam)
    raise PreconditionError(f"--model {args.model} is not a matrix model")


def _pair(args: argparse.Namespace) -> FundamentalPair:
    if args.model == "vd":
        _require(args, "d")
        return basic_pair(args.d)
    if args.model == "sum":
        dims = args.dims
        if dims is None:
            _require(args, "d")
            dims = [args.d, args.d]
        if len(dims) > len(SUM_PREFIXES):
            raise PreconditionError(f"at most {len(SUM_PREFIXES)} summands are supported")
        return direct_sum([basic_pair(d, SUM_PREFIXES[k]) for k, d in enumerate(dims)])
    return _model(args).pair


def _poly(args: argparse.Namespace, pair: FundamentalPair) -> Polynomial:
    _require(args, "poly")
    return poly_parse(args.poly, pair.vars)


def _status(passed: bool) -> Status:
    return Status.PASS if passed else Status.FAIL


def _certificate_record(certificate: Optional[Certificate]) -> Optional[Dict[str, Any]]:
    if certificate is None:
        return None
    record = CertificateRecord(derived_from=certificate.derived_from, **certificate.to_record())
    return record.model_dump(by_alias=True, exclude_none=True)


def cmd_pair_check(args: argparse.Namespace) -> Outcome:
    """Check the sl2 relations of a pair on the ambient ring."""
    pair = _pair(args)
    report = check_relations(pair)
    result = {
        "pair": PairRecord.from_pair(pair).model_dump(),
        "relationsChecked": list(report.relations_checked),
        "sampleSize": report.sample_size,
        "violation": report.violation,
        "witness": report.witness,
        "residual": text(report.residual) if report.residual is not None else None,
    }
    return result, _status(report.passed)


def cmd_kernel(args: argparse.Namespace) -> Outcome:
    """Basis of ker D^power or ker U^power on a (degree, weight) slice."""
    _require(args, "degree", "weight")
    pair = _pair(args)
    basis = kernel_basis(pair, args.which, args.degree, args.weight, args.power)
    source = component(pair, args.degree, args.weight)
    return {"sliceSize": len(source), "dimension": len(basis), "basis": text(basis)}, Status.PASS


def cmd_criterion(args: argparse.Namespace) -> Outcome:
    """Search A_1 and A_2 certificates up to a degree bound."""
    pair = _pair(args)
    verdict = criterion(pair, args.bound)
    result = {
        "searchBound": verdict.search_bound,
        "tripleCompatible": verdict.triple_compatible.value,
        "pairCompatible": verdict.pair_compatible.value,
        "tripleCertificate": _certificate_record(verdict.triple_certificate),
        "pairCertificate": _certificate_record(verdict.pair_certificate),
    }
    return result, Status.PASS if verdict.any_found else Status.NOT_FOUND


def cmd_decompose(args: argparse.Namespace) -> Outcome:
    """Isotypic decomposition of a polynomial."""
    pair = _pair(args)
    f = _poly(args, pair)
    decomposition = isotypic_decompose(pair, f)
    sums = decomposition.total(pair.vars) == f
    annihilated = all(not pair.D.power(part, n + 1) for n, part in decomposition.parts.items())
    result = {
        "parts": text(decomposition.parts),
        "sumsToInput": sums,
        "partsAnnihilated": annihilated,
    }
    return result, _status(sums and annihilated)


def _sqfree_record(decomposition: SqfreeDecomposition) -> Dict[str, Any]:
    coefficients = {}
    for monomial, coefficient in decomposition.coeffs.items():
        label = Polynomial.monomial(decomposition.vars, monomial)
        coefficients[text(label)] = text(coefficient)
    return {"generators": text(decomposition.generators), "coefficients": coefficients}


def cmd_reduce(args: argparse.Namespace) -> Outcome:
    """Square-free decompositions over the squares and over y_0..y_d."""
    _require(args, "d")
    pair = basic_pair(args.d)
    f = _poly(args, pair)
    beta = beta_decompose(f)
    gamma = gamma_reduce(args.d, f)
    beta_ok = beta.reassemble() == f
    gamma_ok = gamma.reassemble() == f
    result = {
        "beta": _sqfree_record(beta),
        "gamma": _sqfree_record(gamma),
        "betaRoundTrip": beta_ok,
        "gammaRoundTrip": gamma_ok,
    }
    return result, _status(beta_ok and gamma_ok)


def cmd_count(args: argparse.Namespace) -> Outcome:
    """Cayley-Sylvester count, cross-checked by a nullspace where the slice is small."""
    _require(args, "d", "degree", "weight")
    count = cayley_sylvester(args.d, args.degree, args.weight)
    pair = basic_pair(args.d)
    size = len(component(pair, args.degree, args.weight))
    dimension = None
    if size <= config.hermite_max_slice:
        dimension = len(kernel_basis(pair, "D", args.degree, args.weight))
    result = {"count": count, "sliceSize": size, "kernelDimension": dimension}
    return result, _status(dimension is None or dimension == count)


def cmd_hermite(args: argparse.Namespace) -> Outcome:
    """Hermite reciprocity cs(d, j, i) = cs(j, d, i) for j up to --bound."""
    _require(args, "d", "weight")
    report = hermite_check(args.d, args.weight, args.bound if args.bound is not None else 8)
    rows = [
        {
            "degree": row.degree,
            "count": row.count,
            "reciprocal": row.reciprocal,
            "kernelDimension": row.kernel_dimension,
            "reciprocalKernelDimension": row.reciprocal_kernel_dimension,
        }
        for row in report.rows
    ]
    mismatch = report.first_mismatch
    return {"rows": rows, "firstMismatch": list(mismatch) if mismatch else None}, _status(report.passed)


def cmd_witness(args: argparse.Namespace) -> Outcome:
    """Slice witness g = Uf and the compatibility tree of a kernel element."""
    pair = _pair(args)
    f = _poly(args, pair)
    try:
        witness = useful2_witness(pair, f)
    except RelationViolationError as exc:
        logger.error(f"slice witness failed: {exc}")
        return {"violation": exc.relation, "witness": exc.witness}, Status.FAIL
    tree = compatibility_tree(pair, f)
    result = {
        "kind": witness.kind.value,
        "g": text(witness.g),
        "degD": witness.degree_D,
        "degU": witness.degree_U,
        "tree": {
            "root": tree.root,
            "edges": [
                {"source": e.source, "target": e.target, "label": text(e.label), "holds": e.holds}
                for e in tree.edges
            ],
        },
    }
    return result, _status(tree.passed)


def _load_points(path: Optional[str]) -> Optional[List[Dict[str, Fraction]]]:
    if path is None:
        return None
    with open(path, "r", encoding="utf-8") as fh:
        return PointFile.model_validate(json.load(fh)).to_points()


def cmd_model_check(args: argparse.Namespace) -> Outcome:
    """Relations, invariance, certificate and (optionally) quotient checks of a model."""
    M = _model(args)
    ambient = check_relations(M.pair)
    # quiver m >= 3 acts on the locus only, so the ambient check is informational there
    ambient_counts = not (M.name == "quiver" and int(M.params["m"]) >= 3)
    invariance = check_invariance(M)
    certificate = check_certificate(M)
    result: Dict[str, Any] = {
        "model": M.describe(),
        "ambientRelations": {
            "passed": ambient.passed,
            "asserted": ambient_counts,
            "violation": ambient.violation,
            "witness": ambient.witness,
        },
        "invariance": {
            "generatorsChecked": invariance.generators_checked,
            "failures": [a.to_record() for a in invariance.failures],
        },
        "certificate": {
            "function": text(certificate.certificate),
            "assertions": [a.to_record() for a in certificate.assertions],
            "chain": text(certificate.chain),
        },
    }
    passed = (ambient.passed or not ambient_counts) and invariance.passed and certificate.passed
    if args.mode is not None:
        quotient = check_sl2_mod_ideal(M, args.mode, _load_points(args.points))
        result["quotient"] = {
            "mode": quotient.mode,
            "passed": quotient.passed,
            "residualsChecked": quotient.residuals_checked,
            "pointsChecked": quotient.points_checked,
            "relation": quotient.relation,
            "witness": quotient.witness,
            "residual": text(quotient.residual) if quotient.residual is not None else None,
            "value": text(quotient.value) if quotient.value is not None else None,
        }
        passed = passed and quotient.passed
    return result, _status(passed)


def cmd_flow(args: argparse.Namespace) -> Outcome:
    """exp(tD) or exp(tU) applied to a polynomial; shear check on matrix models."""
    pair = _pair(args)
    derivation = pair.derivation(args.which)
    result: Dict[str, Any] = {"t": text(args.t)}
    passed = True
    if args.poly is not None:
        f = _poly(args, pair)
        report = nilpotency_degree(derivation, f)
        result["image"] = text(exp_apply(derivation, args.t, f))
        result["nilpotencyDegree"] = report.degree
    if args.model in MATRIX_MODELS:
        shear = check_shear(_model(args), args.t)
        result["shear"] = [a.to_record() for a in shear.assertions]
        passed = shear.passed
    elif args.poly is None:
        raise PreconditionError("flow needs --poly for --model vd or sum")
    return result, _status(passed)


def _golden_d3() -> Dict[str, bool]:
    pair = basic_pair(3)
    D, U = pair.D, pair.U
    c = binary_cubic_covariants()
    f, g, h, F, G, s = (c[k] for k in ("f", "g", "h", "F", "G", "s"))
    x0 = Polynomial.variable(pair.vars, "x0")
    x3 = Polynomial.variable(pair.vars, "x3")
    return {
        "Ds = f": D.apply(s) == f,
        "D(f) = 0": not D.apply(f),
        "D(g) = 0": not D.apply(g),
        "D(h) = 0": not D.apply(h),
        "U(F) = 0": not U.apply(F),
        "U(G) = 0": not U.apply(G),
        "s^2 = h + 2fF": s * s == h + f * F * 2,
        "6f^3x3 = x0s^3 - 3gs^2 + 3x0hs - gh": f ** 3 * x3 * 6 == x0 * s ** 3 - g * s ** 2 * 3 + x0 * h * s * 3 - g * h,
        "compatibility tree of f": compatibility_tree(pair, f).passed,
    }


def _golden_named(name: str) -> Dict[str, bool]:
    check = next(c for c in verify_named_certificates() if c.name == name)
    return {
        "nonzero": check.nonzero,
        "D-annihilated": check.annihilated,
        f"weight {check.expected_weight}": check.weight == check.expected_weight,
    }


def _golden_d4() -> Dict[str, bool]:
    witness = quartic_birational_witness()
    return {
        "A_4 element found": not witness.f.is_zero(),
        "A_6 element found": not witness.g.is_zero(),
        "x3^2 f has weight 0": witness.f_lifted_weight == 0,
        "x3^3 g has weight 0": witness.g_lifted_weight == 0,
    }


def cmd_golden(args: argparse.Namespace) -> Outcome:
    """Fixed identity suites: d3, v3v3, v4v4, d4."""
    _require(args, "suite")
    if args.suite == "d3":
        checks = _golden_d3()
    elif args.suite == "v3v3":
        checks = _golden_named("V3+V3")
    elif args.suite == "v4v4":
        checks = _golden_named("V4+V4")
    else:
        checks = _golden_d4()
    return {"suite": args.suite, "checks": checks}, _status(all(checks.values()))


COMMANDS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "pair-check": cmd_pair_check,
    "kernel": cmd_kernel,
    "criterion": cmd_criterion,
    "decompose": cmd_decompose,
    "reduce": cmd_reduce,
    "count": cmd_count,
    "hermite": cmd_hermite,
    "witness": cmd_witness,
    "model-check": cmd_model_check,
    "flow": cmd_flow,
    "golden": cmd_golden,
}


def _inputs(args: argparse.Namespace) -> Dict[str, Any]:
    echoed = {}
    for key, value in sorted(vars(args).items()):
        if key in ("handler", "command", "log_level") or value is None:
            continue
        echoed[key] = text(value)
    return echoed


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    started = time.perf_counter()
    try:
        result, status = args.handler(args)
    except (FundamentalPairsError, ValidationError, json.JSONDecodeError, OSError) as exc:
        logger.error(f"{args.command} failed: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT_CODE

    report = Report(
        command=args.command,
        inputs=_inputs(args),
        result=result,
        status=status,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
    )
    if status is Status.FAIL:
        logger.error(f"{args.command}: verification failed")
    else:
        logger.info(f"{args.command}: {status.value}")
    print(report.to_json())
    return report.exit_code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
