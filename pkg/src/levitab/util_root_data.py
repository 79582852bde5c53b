"""
Root systems in the Bourbaki conventions.

Classical types live in R^r (R^{r+1} for A_r), E6, E7 and E8 in R^8,
F4 in R^4 and G2 in the sum zero plane of R^3.
"""

import dataclasses
import functools
import itertools
import logging
import math
from collections.abc import Sequence

import sympy

from .util_baseclasses import PreconditionException
from .util_lie_types import Family, LieType, ThetaSet
from .util_weight import Fraction, Weight

logger = logging.getLogger(__file__)

HALF = Fraction(1, 2)


def _e(dim: int, *pairs: tuple[int, int | Fraction]) -> Weight:
    values = [Fraction(0)] * dim
    for index, value in pairs:
        values[index - 1] += Fraction(value)
    return Weight(tuple(values))


def _simple_roots_classical(lie_type: LieType) -> list[Weight]:
    r = lie_type.rank
    dim = lie_type.ambient_dim
    roots = [_e(dim, (i, 1), (i + 1, -1)) for i in range(1, r)]
    match lie_type.family:
        case Family.A:
            roots.append(_e(dim, (r, 1), (r + 1, -1)))
        case Family.B:
            roots.append(_e(dim, (r, 1)))
        case Family.C:
            roots.append(_e(dim, (r, 2)))
        case Family.D:
            roots.append(_e(dim, (r - 1, 1), (r, 1)))
    return roots


def _simple_roots_e8() -> list[Weight]:
    alpha_1 = Weight(
        (HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF),
    )
    roots = [alpha_1, _e(8, (1, 1), (2, 1))]
    roots.extend(_e(8, (i, 1), (i - 1, -1)) for i in range(2, 8))
    return roots


def _simple_roots_exceptional(lie_type: LieType) -> list[Weight]:
    match lie_type.family:
        case Family.E6 | Family.E7 | Family.E8:
            return _simple_roots_e8()[: lie_type.rank]
        case Family.F4:
            return [
                _e(4, (2, 1), (3, -1)),
                _e(4, (3, 1), (4, -1)),
                _e(4, (4, 1)),
                Weight((HALF, -HALF, -HALF, -HALF)),
            ]
        case Family.G2:
            return [_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, 1), (3, 1))]
    raise PreconditionException(f"Unsupported type {lie_type}!")


def reflect(v: Weight, alpha: Weight) -> Weight:
    """
    s_α(v) = v - <v, α^∨> α
    """
    return v - alpha.scale(pairing(v, alpha))


def pairing(v: Weight, alpha: Weight) -> Fraction:
    """
    <v, α^∨> = 2 (v, α) / (α, α)
    """
    return 2 * v.dot(alpha) / alpha.norm2()


def _to_fraction(value: sympy.Rational) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


@dataclasses.dataclass(frozen=True, repr=False)
class RootData:
    """
    All data derived from the simple roots of one type.
    """

    lie_type: LieType
    simple_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    """
    Ordered by height, then lexicographically.
    """
    cartan: tuple[tuple[int, ...], ...]
    """
    cartan[i][j] = <α_j, α_i^∨>
    """
    fundamental_in_roots: tuple[tuple[Fraction, ...], ...]
    """
    ϖ_i = Σ_k fundamental_in_roots[i][k] α_k
    """

    @property
    def rho(self) -> Weight:
        total = Weight.zero(self.lie_type.ambient_dim)
        for w in self.fundamental_weights:
            total = total + w
        return total


def _cartan(simple: Sequence[Weight]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for alpha_i in simple:
        row = []
        for alpha_j in simple:
            value = pairing(alpha_j, alpha_i)
            assert value.denominator == 1
            row.append(int(value))
        rows.append(tuple(row))
    return tuple(rows)


def _root_closure(simple: Sequence[Weight]) -> set[Weight]:
    roots: set[Weight] = set(simple)
    frontier = list(simple)
    while frontier:
        new_frontier = []
        for beta in frontier:
            for alpha in simple:
                image = reflect(beta, alpha)
                if image not in roots:
                    roots.add(image)
                    new_frontier.append(image)
        frontier = new_frontier
    return roots


@functools.cache
def root_data_of(lie_type: LieType) -> RootData:
    if lie_type.is_classical:
        simple = _simple_roots_classical(lie_type)
    else:
        simple = _simple_roots_exceptional(lie_type)
    cartan = _cartan(simple)
    r = lie_type.rank

    # ϖ_i = Σ_k M_ik α_k with <ϖ_i, α_j^∨> = δ_ij, hence M = (A^T)^-1
    matrix = sympy.Matrix(r, r, lambda i, j: cartan[j][i])
    inverse = matrix.inv()
    fundamental_in_roots = tuple(
        tuple(_to_fraction(inverse[i, k]) for k in range(r)) for i in range(r)
    )
    fundamental = []
    for i in range(r):
        w = Weight.zero(lie_type.ambient_dim)
        for k in range(r):
            w = w + simple[k].scale(fundamental_in_roots[i][k])
        fundamental.append(w)

    rho = Weight.zero(lie_type.ambient_dim)
    for w in fundamental:
        rho = rho + w
    positive = [beta for beta in _root_closure(simple) if beta.dot(rho) > 0]
    positive.sort(key=lambda beta: (beta.dot(rho), beta.coords))

    root_data = RootData(
        lie_type=lie_type,
        simple_roots=tuple(simple),
        fundamental_weights=tuple(fundamental),
        positive_roots=tuple(positive),
        cartan=cartan,
        fundamental_in_roots=fundamental_in_roots,
    )
    logger.debug(f"Root data of {lie_type}: {len(positive)} positive roots")
    return root_data


def root_data(lie_type: LieType) -> tuple[list[Weight], list[Weight]]:
    """
    Return the simple roots and the fundamental weights in e-coordinates.
    """
    data = root_data_of(lie_type)
    return list(data.simple_roots), list(data.fundamental_weights)


def positive_roots(lie_type: LieType) -> list[Weight]:
    return list(root_data_of(lie_type).positive_roots)


def rho(lie_type: LieType) -> Weight:
    return root_data_of(lie_type).rho


def weyl_group_order(lie_type: LieType) -> int:
    r = lie_type.rank
    match lie_type.family:
        case Family.A:
            return math.factorial(r + 1)
        case Family.B | Family.C:
            return 2**r * math.factorial(r)
        case Family.D:
            return 2 ** (r - 1) * math.factorial(r)
        case Family.E6:
            return 51_840
        case Family.E7:
            return 2_903_040
        case Family.E8:
            return 696_729_600
        case Family.F4:
            return 1_152
        case Family.G2:
            return 12
    raise PreconditionException(f"Unsupported type {lie_type}!")


def check_length(lie_type: LieType, w: Weight) -> None:
    if len(w) != lie_type.ambient_dim:
        raise PreconditionException(
            f"Weight {w} has {len(w)} coordinates, {lie_type} expects {lie_type.ambient_dim}!"
        )


def fundamental_coordinates(lie_type: LieType, w: Weight) -> tuple[Fraction, ...]:
    """
    The coordinates x_i = <w, α_i^∨> of w in the basis (ϖ_i).
    """
    check_length(lie_type, w)
    data = root_data_of(lie_type)
    coords = tuple(pairing(w, alpha) for alpha in data.simple_roots)
    if weight_from_fundamental(lie_type, coords) != w:
        raise PreconditionException(
            f"Weight {w} does not lie in the span of the roots of {lie_type}!"
        )
    return coords


def weight_from_fundamental(
    lie_type: LieType, x: Sequence[int | Fraction]
) -> Weight:
    """
    Σ x_i ϖ_i in e-coordinates.
    """
    data = root_data_of(lie_type)
    if len(x) != lie_type.rank:
        raise PreconditionException(
            f"{lie_type} expects {lie_type.rank} fundamental coordinates, got {len(x)}!"
        )
    w = Weight.zero(lie_type.ambient_dim)
    for x_i, varpi in zip(x, data.fundamental_weights):
        if x_i != 0:
            w = w + varpi.scale(Fraction(x_i))
    return w


def simple_root_coordinates(lie_type: LieType, w: Weight) -> tuple[Fraction, ...]:
    """
    The coefficients c_k with w = Σ c_k α_k.
    """
    data = root_data_of(lie_type)
    x = fundamental_coordinates(lie_type, w)
    r = lie_type.rank
    return tuple(
        sum((x[i] * data.fundamental_in_roots[i][k] for i in range(r)), Fraction(0))
        for k in range(r)
    )


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class WeightFlags:
    dominant: bool
    integral: bool
    radical: bool

    def __post_init__(self) -> None:
        assert isinstance(self.dominant, bool)
        assert isinstance(self.integral, bool)
        assert isinstance(self.radical, bool)


def _all_integer(values: Sequence[Fraction]) -> bool:
    return all(v.denominator == 1 for v in values)


def _all_half_odd(values: Sequence[Fraction]) -> bool:
    return all(v.denominator == 2 for v in values)


def _nonincreasing(values: Sequence[Fraction]) -> bool:
    return all(a >= b for a, b in itertools.pairwise(values))


def classify_weight(lie_type: LieType, w: Weight) -> WeightFlags:
    """
    Dominance, integrality and radicality.

    Classical types follow the closed forms in the e-coordinates,
    exceptional types use the fundamental and simple root coordinates.
    """
    check_length(lie_type, w)
    c = w.coords
    match lie_type.family:
        case Family.A:
            if sum(c) != 0:
                raise PreconditionException(
                    f"A weight of {lie_type} must have coordinate sum 0: {w}!"
                )
            integral = all((a - c[0]).denominator == 1 for a in c)
            return WeightFlags(
                dominant=_nonincreasing(c),
                integral=integral,
                radical=_all_integer(c),
            )
        case Family.B:
            return WeightFlags(
                dominant=_nonincreasing(c) and c[-1] >= 0,
                integral=_all_integer(c) or _all_half_odd(c),
                radical=_all_integer(c),
            )
        case Family.C:
            return WeightFlags(
                dominant=_nonincreasing(c) and c[-1] >= 0,
                integral=_all_integer(c),
                radical=_all_integer(c) and sum(c) % 2 == 0,
            )
        case Family.D:
            dominant = _nonincreasing(c[:-1]) and c[-2] >= abs(c[-1])
            return WeightFlags(
                dominant=dominant,
                integral=_all_integer(c) or _all_half_odd(c),
                radical=_all_integer(c) and sum(c) % 2 == 0,
            )
    x = fundamental_coordinates(lie_type, w)
    return WeightFlags(
        dominant=all(v >= 0 for v in x),
        integral=_all_integer(x),
        radical=_all_integer(simple_root_coordinates(lie_type, w)),
    )


def classify_weight_generic(lie_type: LieType, w: Weight) -> WeightFlags:
    """
    Same flags as classify_weight, always computed from the root data.
    """
    x = fundamental_coordinates(lie_type, w)
    return WeightFlags(
        dominant=all(v >= 0 for v in x),
        integral=_all_integer(x),
        radical=_all_integer(simple_root_coordinates(lie_type, w)),
    )


def require_dominant_integral(lie_type: LieType, w: Weight) -> WeightFlags:
    flags = classify_weight(lie_type, w)
    if not (flags.dominant and flags.integral):
        raise PreconditionException(
            f"Weight {w} is not dominant integral for {lie_type}!"
        )
    return flags


def dominant_representative(lie_type: LieType, v: Weight) -> Weight:
    """
    The unique dominant element of the Weyl orbit of v.
    """
    check_length(lie_type, v)
    match lie_type.family:
        case Family.A:
            return Weight(tuple(sorted(v.coords, reverse=True)))
        case Family.B | Family.C:
            return Weight(tuple(sorted((abs(a) for a in v.coords), reverse=True)))
        case Family.D:
            values = sorted((abs(a) for a in v.coords), reverse=True)
            negatives = sum(1 for a in v.coords if a < 0)
            if negatives % 2 == 1 and values[-1] != 0:
                values[-1] = -values[-1]
            return Weight(tuple(values))
    return dominant_conjugate(lie_type, v)


def dominant_conjugate(lie_type: LieType, v: Weight) -> Weight:
    """
    Reflect along simple roots with negative pairing until v is dominant.
    """
    simple = root_data_of(lie_type).simple_roots
    while True:
        for alpha in simple:
            if pairing(v, alpha) < 0:
                v = reflect(v, alpha)
                break
        else:
            return v


def apply_sigma(lie_type: LieType, w: Weight) -> Weight:
    """
    The diagram automorphism of D_r: σ(e_r) = -e_r. Identity for other types.
    """
    if lie_type.family is not Family.D:
        return w
    return Weight(w.coords[:-1] + (-w.coords[-1],))


def root_in_span(lie_type: LieType, beta: Weight, theta: ThetaSet) -> bool:
    """
    True if the root β is a combination of the simple roots in Θ.
    """
    coords = simple_root_coordinates(lie_type, beta)
    return all(c == 0 for k, c in enumerate(coords, start=1) if k not in theta)
