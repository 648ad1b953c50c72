"""
Calogero-Moser and cyclic-quiver models on ambient matrix-entry rings.

Key Features:
- cm: D = X d/dY, U = Y d/dX on n x n matrices X, Y
- cm-rank2: the framed variant with vectors v1, v2, w1, w2 and level tau
- quiver: cyclic block matrices with D = X^{m-1} d/dY, U = Y^{m-1} d/dX
- Built-in rational points on the relation locus for n = 1
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from fundamental_pairs.core.polynomial import Polynomial, Scalar
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.derivations.derivation import Derivation
from fundamental_pairs.exceptions import PreconditionError
from fundamental_pairs.models.matrices import PolyMatrix
from fundamental_pairs.sl2.pair import FundamentalPair

logger = logging.getLogger(__name__)

Point = Dict[str, Fraction]

# Parameter values of the built-in point families
POINT_PARAMETERS: Tuple[Fraction, ...] = (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2))


@dataclass(frozen=True)
class ModelInstance:
    name: str  # cm, cm-rank2 or quiver
    params: Dict[str, object]
    vars: VarTable
    pair: FundamentalPair
    moment_generators: Tuple[Polynomial, ...]  # additive constants dropped
    locus_relations: Tuple[Polynomial, ...]  # exact relations cutting out the locus
    certificate_fn: Polynomial
    exponent: int  # D(Y) = X^exponent, U(X) = Y^exponent
    matrices: Dict[str, PolyMatrix] = field(default_factory=dict)
    blocks: Dict[str, Tuple[PolyMatrix, ...]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return int(self.params["n"])

    def describe(self) -> Dict[str, object]:
        return {
            "model": self.name,
            "params": {k: _param_text(v) for k, v in self.params.items()},
            "variables": len(self.vars),
            "exponent": self.exponent,
        }


def _param_text(value: object) -> object:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [str(v) for v in value]
    return value


def _images(vars: VarTable, assignments: Dict[str, Polynomial]) -> Derivation:
    return Derivation.from_mapping(vars, assignments)


def build_cm(n: int) -> ModelInstance:
    """D = X d/dY, U = Y d/dX on pairs of n x n matrices."""
    if n < 1:
        raise PreconditionError("cm model needs n >= 1")
    names = [f"X_{i}_{j}" for i in range(n) for j in range(n)]
    names += [f"Y_{i}_{j}" for i in range(n) for j in range(n)]
    vars = VarTable.from_names(names)
    X = PolyMatrix.symbolic(vars, lambda i, j: f"X_{i}_{j}", n, n)
    Y = PolyMatrix.symbolic(vars, lambda i, j: f"Y_{i}_{j}", n, n)

    D = _images(vars, {f"Y_{i}_{j}": X[i, j] for i in range(n) for j in range(n)})
    U = _images(vars, {f"X_{i}_{j}": Y[i, j] for i in range(n) for j in range(n)})
    commutator = X.commutator(Y)
    shifted = commutator + PolyMatrix.identity(vars, n)

    logger.debug(f"built cm model with n={n} on {len(vars)} variables")
    return ModelInstance(
        name="cm",
        params={"n": n},
        vars=vars,
        pair=FundamentalPair.from_derivations(D, U),
        moment_generators=tuple(commutator.flat()),
        locus_relations=tuple(shifted.minors2()),
        certificate_fn=X.trace(),
        exponent=1,
        matrices={"X": X, "Y": Y},
    )


def build_cm_rank2(n: int, tau: Scalar = 0) -> ModelInstance:
    """Framed cm model: [A, B] - vw = tau I with v = (v1 | v2), w = (w1 ; w2)."""
    if n < 1:
        raise PreconditionError("cm-rank2 model needs n >= 1")
    tau = Fraction(tau)
    names = [f"A_{i}_{j}" for i in range(n) for j in range(n)]
    names += [f"B_{i}_{j}" for i in range(n) for j in range(n)]
    for prefix in ("v1", "v2", "w1", "w2"):
        names += [f"{prefix}_{i}" for i in range(n)]
    vars = VarTable.from_names(names)
    A = PolyMatrix.symbolic(vars, lambda i, j: f"A_{i}_{j}", n, n)
    B = PolyMatrix.symbolic(vars, lambda i, j: f"B_{i}_{j}", n, n)
    v = PolyMatrix.symbolic(vars, lambda i, j: f"v{j + 1}_{i}", n, 2)
    w = PolyMatrix.symbolic(vars, lambda i, j: f"w{i + 1}_{j}", 2, n)

    def var(name: str) -> Polynomial:
        return Polynomial.variable(vars, name)

    D_images: Dict[str, Polynomial] = {f"B_{i}_{j}": A[i, j] for i in range(n) for j in range(n)}
    U_images: Dict[str, Polynomial] = {f"A_{i}_{j}": B[i, j] for i in range(n) for j in range(n)}
    for i in range(n):
        D_images[f"v2_{i}"] = var(f"v1_{i}")
        D_images[f"w1_{i}"] = -var(f"w2_{i}")
        U_images[f"v1_{i}"] = var(f"v2_{i}")
        U_images[f"w2_{i}"] = -var(f"w1_{i}")

    moment = A.commutator(B) - v * w
    level = moment - PolyMatrix.identity(vars, n, tau)

    logger.debug(f"built cm-rank2 model with n={n}, tau={tau}")
    return ModelInstance(
        name="cm-rank2",
        params={"n": n, "tau": tau},
        vars=vars,
        pair=FundamentalPair.from_derivations(_images(vars, D_images), _images(vars, U_images)),
        moment_generators=tuple(moment.flat()),
        locus_relations=tuple(level.flat()),
        certificate_fn=A.trace(),
        exponent=1,
        matrices={"X": A, "Y": B, "v": v, "w": w},
    )


def default_lambda(m: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(i + 1) for i in range(m))


def build_quiver(m: int, n: int, lam: Optional[Sequence[Scalar]] = None) -> ModelInstance:
    """
    Cyclic quiver on m vertices with dimension vector (n, ..., n) and a
    one-dimensional framing at vertex 0.

    X_a sits in block (a, a+1 mod m) and Y_a in block (a+1 mod m, a).
    D sends each Y-entry to the matching entry of X^{m-1}; for m = 1 the
    exponent is 1 so that (D, U) is the cm pair with an added v, w.
    """
    if m < 1 or n < 1:
        raise PreconditionError("quiver model needs m >= 1 and n >= 1")
    lam = default_lambda(m) if lam is None else tuple(Fraction(x) for x in lam)
    if len(lam) != m:
        raise PreconditionError(f"expected {m} lambda values, got {len(lam)}")

    names: List[str] = []
    for prefix in ("X", "Y"):
        names += [f"{prefix}_{a}_{i}_{j}" for a in range(m) for i in range(n) for j in range(n)]
    names += [f"v_{i}" for i in range(n)] + [f"w_{i}" for i in range(n)]
    vars = VarTable.from_names(names)

    X_blocks = tuple(PolyMatrix.symbolic(vars, lambda i, j, a=a: f"X_{a}_{i}_{j}", n, n) for a in range(m))
    Y_blocks = tuple(PolyMatrix.symbolic(vars, lambda i, j, a=a: f"Y_{a}_{i}_{j}", n, n) for a in range(m))
    X = PolyMatrix.from_blocks(vars, {(a, (a + 1) % m): X_blocks[a] for a in range(m)}, m, n)
    Y = PolyMatrix.from_blocks(vars, {((a + 1) % m, a): Y_blocks[a] for a in range(m)}, m, n)

    size = m * n
    v = PolyMatrix(vars, [[Polynomial.variable(vars, f"v_{i}")] for i in range(n)] + [[Polynomial.zero(vars)]] * (size - n))
    w = PolyMatrix(vars, [[Polynomial.variable(vars, f"w_{i}") for i in range(n)] + [Polynomial.zero(vars)] * (size - n)])
    Lam = PolyMatrix(vars, [
        [Polynomial.constant(vars, lam[r // n]) if r == c else Polynomial.zero(vars) for c in range(size)]
        for r in range(size)
    ])

    exponent = m - 1 if m >= 2 else 1
    X_power = X.power(exponent)
    Y_power = Y.power(exponent)
    D_images: Dict[str, Polynomial] = {}
    U_images: Dict[str, Polynomial] = {}
    for a in range(m):
        for i in range(n):
            for j in range(n):
                row, col = ((a + 1) % m) * n + i, a * n + j
                D_images[f"Y_{a}_{i}_{j}"] = X_power[row, col]
                row, col = a * n + i, ((a + 1) % m) * n + j
                U_images[f"X_{a}_{i}_{j}"] = Y_power[row, col]

    block = X.commutator(Y) + v * w
    scalar = (w * v)[0, 0]
    weighted_dimension = sum(lam) * n

    logger.debug(f"built quiver model with m={m}, n={n}, lambda={[str(x) for x in lam]}")
    return ModelInstance(
        name="quiver",
        params={"m": m, "n": n, "alpha": tuple([n] * m), "lambda": lam},
        vars=vars,
        pair=FundamentalPair.from_derivations(_images(vars, D_images), _images(vars, U_images)),
        moment_generators=tuple(block.flat()) + (scalar,),
        locus_relations=tuple((block - Lam).flat()) + (scalar - weighted_dimension,),
        certificate_fn=(X * Y).trace(),
        exponent=exponent,
        matrices={"X": X, "Y": Y},
        blocks={"X": X_blocks, "Y": Y_blocks},
    )


def locus_points(M: ModelInstance) -> List[Point]:
    """
    Rational points on the relation locus, one per entry of POINT_PARAMETERS.

    Only n = 1 is covered, where every block is a scalar.
    """
    if M.n != 1:
        raise PreconditionError("built-in points exist only for n = 1; supply a point file")
    points: List[Point] = []
    for t in POINT_PARAMETERS:
        if M.name == "cm":
            points.append({"X_0_0": t, "Y_0_0": 1 - t})
        elif M.name == "cm-rank2":
            tau = Fraction(M.params["tau"])
            points.append({
                "A_0_0": t, "B_0_0": 2 * t,
                "v1_0": Fraction(1), "w1_0": -tau - t,
                "v2_0": t, "w2_0": Fraction(1),
            })
        else:
            lam = M.params["lambda"]
            m = int(M.params["m"])
            point: Point = {"v_0": Fraction(1), "w_0": sum(lam, Fraction(0))}
            level = t
            for a in range(m):
                if a:
                    level += lam[a]
                x = Fraction(a + 1)
                point[f"X_{a}_0_0"] = x
                point[f"Y_{a}_0_0"] = level / x
            points.append(point)
    return points
