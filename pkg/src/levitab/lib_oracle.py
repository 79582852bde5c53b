"""
Brute force ground truth for the tableau counters.

* Weight multiplicities by the Freudenthal recursion on dominant weights.
* dim V_λ by the Weyl dimension formula.
* dim V_λ^{l(Θ)} by highest weight extraction or by an alternating sum over W_Θ.
* The Bruhat tuple condition by a search over the explicit Weyl group.

Internally a weight is stored by its Dynkin labels x_i = <λ, α_i^∨> and the
invariant form by the Gram matrix of the fundamental weights, scaled to integers.
"""

from __future__ import annotations

import collections
import dataclasses
import enum
import functools
import logging
import math
from collections.abc import Iterator, Sequence

import numpy as np

from .util_baseclasses import (
    BudgetExceededException,
    InternalErrorException,
    PreconditionException,
)
from .util_constants import DIM_BUDGET, WEYL_GROUP_ORDER_BOUND
from .util_lie_types import LieType, ThetaSet
from .util_root_data import (
    check_length,
    dominant_representative,
    fundamental_coordinates,
    require_dominant_integral,
    root_data_of,
    simple_root_coordinates,
    weight_from_fundamental,
)
from .util_weight import Fraction, Weight
from .util_weyl import bruhat_table, check_rank_bound

logger = logging.getLogger(__file__)

Labels = tuple[int, ...]


class OracleMethod(str, enum.Enum):
    AUTO = "auto"
    """
    Alternating sum, extraction when W_Θ exceeds WEYL_GROUP_ORDER_BOUND.
    """
    EXTRACTION = "extraction"
    WEYL = "weyl"


@dataclasses.dataclass(frozen=True, eq=False)
class _Lattice:
    lie_type: LieType
    cartan: np.ndarray
    """
    cartan[i, j] = <α_j, α_i^∨>: column j holds the Dynkin labels of α_j.
    """
    gram: np.ndarray
    """
    gram[i, j] = scale * (ϖ_i, ϖ_j), integral.
    """
    positive: np.ndarray
    """
    Dynkin labels of the positive roots, one row per root.
    """
    positive_support: tuple[frozenset[int], ...]
    """
    Simple roots (1-based) occurring in each positive root.
    """
    root_coords: np.ndarray
    """
    root_denominator * (ϖ_i in simple root coordinates), integral.
    """
    root_denominator: int

    def form(self, mu: np.ndarray, nu: np.ndarray) -> int:
        return int(mu @ self.gram @ nu)

    def reflect(self, mu: np.ndarray, i: int) -> np.ndarray:
        """
        s_i with i starting at 0.
        """
        return mu - mu[i] * self.cartan[:, i]

    def dominant(self, mu: np.ndarray) -> np.ndarray:
        while True:
            negative = np.flatnonzero(mu < 0)
            if negative.size == 0:
                return mu
            mu = self.reflect(mu, int(negative[0]))

    def scaled_root_coords(self, mu: np.ndarray) -> np.ndarray:
        return mu @ self.root_coords

    def orbit(self, mu: Labels) -> Iterator[Labels]:
        """
        The Weyl orbit of mu, breadth first.
        """
        seen = {mu}
        frontier = [mu]
        yield mu
        while frontier:
            new_frontier = []
            for nu in frontier:
                vector = np.array(nu, dtype=np.int64)
                for i in range(len(nu)):
                    if nu[i] == 0:
                        continue
                    image = _key(self.reflect(vector, i))
                    if image not in seen:
                        seen.add(image)
                        new_frontier.append(image)
                        yield image
            frontier = new_frontier


def _key(mu: np.ndarray) -> Labels:
    return tuple(int(v) for v in mu)


def _lcm_of_denominators(values: Sequence[Fraction]) -> int:
    return math.lcm(*(v.denominator for v in values))


@functools.cache
def _lattice(lie_type: LieType) -> _Lattice:
    data = root_data_of(lie_type)
    r = lie_type.rank
    fundamental = data.fundamental_weights
    products = [[a.dot(b) for b in fundamental] for a in fundamental]
    scale = _lcm_of_denominators([p for row in products for p in row])
    gram = np.array([[int(p * scale) for p in row] for row in products], dtype=np.int64)

    positive_rows = []
    support = []
    for beta in data.positive_roots:
        positive_rows.append([int(x) for x in fundamental_coordinates(lie_type, beta)])
        coords = simple_root_coordinates(lie_type, beta)
        support.append(frozenset(k for k, c in enumerate(coords, start=1) if c != 0))

    flat = [c for row in data.fundamental_in_roots for c in row]
    root_denominator = _lcm_of_denominators(flat)
    root_coords = np.array(
        [[int(c * root_denominator) for c in row] for row in data.fundamental_in_roots],
        dtype=np.int64,
    )
    return _Lattice(
        lie_type=lie_type,
        cartan=np.array(data.cartan, dtype=np.int64).reshape(r, r),
        gram=gram,
        positive=np.array(positive_rows, dtype=np.int64).reshape(-1, r),
        positive_support=tuple(support),
        root_coords=root_coords,
        root_denominator=root_denominator,
    )


def _labels(lie_type: LieType, w: Weight) -> Labels:
    x = fundamental_coordinates(lie_type, w)
    if any(v.denominator != 1 for v in x):
        raise PreconditionException(f"Weight {w} is not integral for {lie_type}!")
    return tuple(int(v) for v in x)


@dataclasses.dataclass(frozen=True, repr=False, eq=True)
class CharacterTable:
    """
    char(V) = Σ m(μ) e^μ with the weights μ in e-coordinates.
    """

    lie_type: LieType
    entries: tuple[tuple[Weight, int], ...]
    """
    Sorted by weight, multiplicities positive.
    """

    def __post_init__(self) -> None:
        assert isinstance(self.lie_type, LieType)
        assert isinstance(self.entries, tuple)
        for w, m in self.entries:
            assert isinstance(w, Weight)
            assert isinstance(m, int) and m > 0

    @staticmethod
    def of(lie_type: LieType, multiplicities: dict[Weight, int]) -> CharacterTable:
        return CharacterTable(
            lie_type, tuple(sorted((w, m) for w, m in multiplicities.items() if m > 0))
        )

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def multiplicity(self, mu: Weight) -> int:
        for w, m in self.entries:
            if w == mu:
                return m
        return 0

    def counter(self) -> collections.Counter[Weight]:
        return collections.Counter(dict(self.entries))

    def is_weyl_invariant(self) -> bool:
        """
        Multiplicities are constant on the Weyl orbits.
        """
        by_dominant: dict[Weight, int] = {}
        for w, m in self.entries:
            dominant = dominant_representative(self.lie_type, w)
            if by_dominant.setdefault(dominant, m) != m:
                return False
        return True

    def to_json(self) -> list[dict[str, str | int]]:
        return [{"weight": w.text, "multiplicity": m} for w, m in self.entries]

    def __repr__(self) -> str:
        return f"CharacterTable({self.lie_type}, {len(self.entries)} weights, dim {self.dimension})"


def weyl_dim(lam: Weight, lie_type: LieType) -> int:
    """
    dim V_λ = Π_{α>0} (λ+ρ, α) / (ρ, α)
    """
    require_dominant_integral(lie_type, lam)
    data = root_data_of(lie_type)
    shifted = lam + data.rho
    numerator = Fraction(1)
    denominator = Fraction(1)
    for beta in data.positive_roots:
        numerator *= shifted.dot(beta)
        denominator *= data.rho.dot(beta)
    dim = numerator / denominator
    if dim.denominator != 1:
        raise InternalErrorException(f"Weyl dimension of {lam} for {lie_type} is not integral: {dim}")
    return int(dim)


def check_dim_budget(lam: Weight, lie_type: LieType, dim_budget: int = DIM_BUDGET) -> int:
    dim = weyl_dim(lam, lie_type)
    if dim > dim_budget:
        raise BudgetExceededException(
            f"dim V_{lam} of {lie_type} exceeds the dimension budget",
            budget=dim_budget,
            required=dim,
        )
    return dim


def _dominant_weights(lattice: _Lattice, top: Labels) -> list[Labels]:
    """
    The dominant weights below top, sorted by the height of top - μ.
    """
    root_heights = _root_heights(lattice)
    depth = {top: 0}
    frontier = [top]
    while frontier:
        new_frontier = []
        for mu in frontier:
            vector = np.array(mu, dtype=np.int64)
            for beta, height in zip(lattice.positive, root_heights):
                nu = vector - beta
                if (nu < 0).any():
                    continue
                key = _key(nu)
                if key not in depth:
                    depth[key] = depth[mu] + height
                    new_frontier.append(key)
        frontier = new_frontier
    return sorted(depth, key=lambda mu: (depth[mu], mu))


def _root_heights(lattice: _Lattice) -> list[int]:
    heights = []
    for row in lattice.positive:
        scaled = int(lattice.scaled_root_coords(row).sum())
        assert scaled % lattice.root_denominator == 0
        heights.append(scaled // lattice.root_denominator)
    return heights


def _freudenthal_term(
    lattice: _Lattice,
    mu: np.ndarray,
    beta: np.ndarray,
    lookup: dict[Labels, int],
    dominant: bool,
) -> int:
    """
    Σ_{k>=1} m(μ+kβ) (μ+kβ, β), stopping at the end of the β-string.
    """
    total = 0
    k = 1
    while True:
        nu = mu + k * beta
        key = _key(lattice.dominant(nu) if dominant else nu)
        value = lookup.get(key, 0)
        if value == 0:
            return total
        total += value * lattice.form(nu, beta)
        k += 1


@functools.cache
def _dominant_table(lie_type: LieType, top: Labels) -> dict[Labels, int]:
    lattice = _lattice(lie_type)
    t = np.array(top, dtype=np.int64)
    rho2 = 2 * np.ones(len(top), dtype=np.int64)
    multiplicities = {top: 1}
    for mu in _dominant_weights(lattice, top)[1:]:
        m = np.array(mu, dtype=np.int64)
        total = sum(
            _freudenthal_term(lattice, m, beta, multiplicities, dominant=True)
            for beta in lattice.positive
        )
        # (λ+ρ, λ+ρ) - (μ+ρ, μ+ρ) = (λ-μ, λ+μ+2ρ)
        denominator = lattice.form(t - m, t + m + rho2)
        value, remainder = divmod(2 * total, denominator)
        if remainder != 0 or value <= 0:
            raise InternalErrorException(
                f"Freudenthal recursion of {top} for {lie_type} failed at {mu}: {2 * total}/{denominator}"
            )
        multiplicities[mu] = value
    logger.debug(
        f"Freudenthal {lie_type} {top}: {len(multiplicities)} dominant weights"
    )
    return multiplicities


def dominant_multiplicities(
    lam: Weight, lie_type: LieType, dim_budget: int = DIM_BUDGET
) -> dict[Weight, int]:
    """
    m_λ(μ) for the dominant weights μ of V_λ.
    """
    require_dominant_integral(lie_type, lam)
    check_dim_budget(lam, lie_type, dim_budget)
    table = _dominant_table(lie_type, _labels(lie_type, lam))
    return {weight_from_fundamental(lie_type, mu): m for mu, m in table.items()}


def weight_multiplicities(
    lam: Weight, lie_type: LieType, dim_budget: int = DIM_BUDGET
) -> CharacterTable:
    """
    The full character of V_λ: every dominant multiplicity spread over its Weyl orbit.
    """
    require_dominant_integral(lie_type, lam)
    check_dim_budget(lam, lie_type, dim_budget)
    lattice = _lattice(lie_type)
    multiplicities: dict[Weight, int] = {}
    for mu, m in _dominant_table(lie_type, _labels(lie_type, lam)).items():
        for nu in lattice.orbit(mu):
            multiplicities[weight_from_fundamental(lie_type, nu)] = m
    return CharacterTable.of(lie_type, multiplicities)


def _multiplicity(lattice: _Lattice, table: dict[Labels, int], mu: np.ndarray) -> int:
    return table.get(_key(lattice.dominant(mu)), 0)


def _levi_roots(lattice: _Lattice, theta: ThetaSet) -> np.ndarray:
    rows = [
        beta
        for beta, support in zip(lattice.positive, lattice.positive_support)
        if support <= theta.indices
    ]
    return np.array(rows, dtype=np.int64).reshape(-1, lattice.cartan.shape[0])


def _invariants_alternating(
    lattice: _Lattice, table: dict[Labels, int], theta: ThetaSet, order_bound: int
) -> int:
    """
    n_0 = Σ_{w ∈ W_Θ} ε(w) m_λ(ρ_Θ - w ρ_Θ)

    ρ_Θ is regular for W_Θ, so its orbit lists W_Θ once and the breadth
    first depth is ℓ(w).
    """
    rho2 = _levi_roots(lattice, theta).sum(axis=0)
    generators = [i - 1 for i in theta]
    parity = {_key(rho2): 0}
    frontier = [_key(rho2)]
    while frontier:
        new_frontier = []
        for mu in frontier:
            vector = np.array(mu, dtype=np.int64)
            for i in generators:
                image = _key(lattice.reflect(vector, i))
                if image not in parity:
                    parity[image] = 1 - parity[mu]
                    new_frontier.append(image)
        if len(parity) > order_bound:
            raise BudgetExceededException(
                f"Order of W_Θ for Θ={theta.text} in {lattice.lie_type} exceeds the bound",
                budget=order_bound,
            )
        frontier = new_frontier

    total = 0
    for mu, sign in parity.items():
        difference = rho2 - np.array(mu, dtype=np.int64)
        assert not (difference % 2).any()
        m = _multiplicity(lattice, table, difference // 2)
        total += -m if sign else m
    if total < 0:
        raise InternalErrorException(
            f"Alternating sum for Θ={theta.text} in {lattice.lie_type} is negative: {total}"
        )
    return total


@functools.cache
def _levi_character(lie_type: LieType, theta: ThetaSet, top: Labels) -> dict[Labels, int]:
    """
    The character of the irreducible l(Θ)-module of highest weight top,
    level by level below top (Freudenthal with the roots of l(Θ)).
    """
    lattice = _lattice(lie_type)
    roots = _levi_roots(lattice, theta)
    rho2 = roots.sum(axis=0)
    simple = [lattice.cartan[:, i - 1] for i in theta]
    t = np.array(top, dtype=np.int64)
    multiplicities = {top: 1}
    level = [top]
    while level:
        candidates = sorted(
            {_key(np.array(mu, dtype=np.int64) - alpha) for mu in level for alpha in simple}
        )
        level = []
        for mu in candidates:
            m = np.array(mu, dtype=np.int64)
            total = sum(
                _freudenthal_term(lattice, m, beta, multiplicities, dominant=False)
                for beta in roots
            )
            if total == 0:
                continue
            denominator = lattice.form(t - m, t + m + rho2)
            if denominator <= 0 or (2 * total) % denominator != 0:
                raise InternalErrorException(
                    f"Levi character of {top} for Θ={theta.text} failed at {mu}"
                )
            multiplicities[mu] = 2 * total // denominator
            level.append(mu)
    return multiplicities


def _invariants_extraction(
    lattice: _Lattice, table: dict[Labels, int], theta: ThetaSet
) -> int:
    """
    Peel off l(Θ)-constituents, highest first, and count the trivial ones.

    Only weights whose component orthogonal to span(Θ) vanishes can belong
    to a trivial constituent, so the residual is restricted to them.
    """
    lie_type = lattice.lie_type
    outside = [k - 1 for k in range(1, lie_type.rank + 1) if k not in theta]
    inside = [k - 1 for k in theta]

    residual: dict[Labels, int] = {}
    for mu, m in table.items():
        for nu in lattice.orbit(mu):
            coords = lattice.scaled_root_coords(np.array(nu, dtype=np.int64))
            if not coords[outside].any():
                residual[nu] = m

    def theta_height(mu: Labels) -> int:
        coords = lattice.scaled_root_coords(np.array(mu, dtype=np.int64))
        return int(coords[inside].sum())

    count = 0
    extractions = 0
    while residual:
        top = max(residual, key=lambda mu: (theta_height(mu), mu))
        n = residual[top]
        if any(top[i] < 0 for i in inside):
            raise InternalErrorException(
                f"Extraction for Θ={theta.text} in {lie_type} reached a non Θ-dominant weight {top}"
            )
        if not any(top):
            count += n
        for mu, m in _levi_character(lie_type, theta, top).items():
            left = residual.get(mu, 0) - n * m
            if left < 0:
                raise InternalErrorException(
                    f"Extraction for Θ={theta.text} in {lie_type}: negative residual at {mu}"
                )
            if left == 0:
                residual.pop(mu, None)
            else:
                residual[mu] = left
        extractions += 1
    logger.debug(f"Extraction for Θ={theta.text} in {lie_type}: {extractions} constituents")
    return count


def dim_invariants_oracle(
    lam: Weight,
    lie_type: LieType,
    theta: ThetaSet,
    method: OracleMethod = OracleMethod.AUTO,
    dim_budget: int = DIM_BUDGET,
    order_bound: int = WEYL_GROUP_ORDER_BOUND,
) -> int:
    """
    The multiplicity of the trivial l(Θ)-module in V_λ restricted to l(Θ).
    """
    require_dominant_integral(lie_type, lam)
    theta = theta.validate(lie_type)
    check_dim_budget(lam, lie_type, dim_budget)
    lattice = _lattice(lie_type)
    table = _dominant_table(lie_type, _labels(lie_type, lam))
    match method:
        case OracleMethod.WEYL:
            return _invariants_alternating(lattice, table, theta, order_bound)
        case OracleMethod.EXTRACTION:
            return _invariants_extraction(lattice, table, theta)
        case OracleMethod.AUTO:
            try:
                return _invariants_alternating(lattice, table, theta, order_bound)
            except BudgetExceededException as e:
                logger.debug(f"{e}: falling back to extraction")
                return _invariants_extraction(lattice, table, theta)
    raise PreconditionException(f"Unknown oracle method {method}!")


def bruhat_tuple_oracle(lie_type: LieType, weights: Sequence[Weight]) -> bool:
    """
    True iff there are w_1 ⪯_B ... ⪯_B w_N with ν_i in the closed chamber w_i h^+.
    """
    check_rank_bound(lie_type)
    if len(weights) == 0:
        raise PreconditionException("The Bruhat tuple condition needs at least one weight!")
    table = bruhat_table(lie_type)
    reachable: int | None = None
    for nu in weights:
        check_length(lie_type, nu)
        mask = table.chamber_mask(nu)
        reachable = mask if reachable is None else table.up_closure(reachable) & mask
        if reachable == 0:
            return False
    return True
