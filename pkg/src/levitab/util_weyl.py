"""
Weyl groups of the classical types as (signed) permutation groups and their Bruhat order.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
from collections.abc import Iterator, Sequence

from .util_baseclasses import BudgetExceededException, PreconditionException
from .util_constants import WEYL_RANK_BOUND
from .util_lie_types import Family, LieType
from .util_root_data import dominant_representative, positive_roots, rho
from .util_weight import Fraction, Weight

logger = logging.getLogger(__file__)


@dataclasses.dataclass(frozen=True, repr=True, eq=True, order=True)
class WeylElement:
    """
    A signed permutation w with w(e_i) = signs[i] * e_{permutation[i]} (indices from 0).
    Type A elements carry only +1 signs.
    """

    permutation: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        assert isinstance(self.permutation, tuple)
        assert isinstance(self.signs, tuple)
        assert len(self.permutation) == len(self.signs)
        assert sorted(self.permutation) == list(range(len(self.permutation)))
        assert all(s in (-1, 1) for s in self.signs)

    @staticmethod
    def identity(dim: int) -> WeylElement:
        return WeylElement(tuple(range(dim)), (1,) * dim)

    @property
    def dim(self) -> int:
        return len(self.permutation)

    @property
    def sign_flips(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def apply_vector(self, v: Sequence) -> tuple:
        out = [v[0]] * len(v)
        for i, (p, s) in enumerate(zip(self.permutation, self.signs)):
            out[p] = v[i] if s > 0 else -v[i]
        return tuple(out)

    def apply(self, v: Weight) -> Weight:
        return Weight(self.apply_vector(v.coords))

    def compose(self, other: WeylElement) -> WeylElement:
        """
        (self ∘ other)(v) = self(other(v))
        """
        permutation = tuple(self.permutation[p] for p in other.permutation)
        signs = tuple(
            s * self.signs[p] for p, s in zip(other.permutation, other.signs)
        )
        return WeylElement(permutation, signs)

    def inverse(self) -> WeylElement:
        permutation = [0] * self.dim
        signs = [1] * self.dim
        for i, (p, s) in enumerate(zip(self.permutation, self.signs)):
            permutation[p] = i
            signs[p] = s
        return WeylElement(tuple(permutation), tuple(signs))


def _check_classical(lie_type: LieType) -> None:
    if not lie_type.is_classical:
        raise PreconditionException(
            f"Explicit Weyl groups are implemented for the classical types only, got {lie_type}!"
        )


def check_rank_bound(lie_type: LieType, rank_bound: int = WEYL_RANK_BOUND) -> None:
    _check_classical(lie_type)
    if lie_type.rank > rank_bound:
        raise BudgetExceededException(
            f"Explicit Weyl group of {lie_type} exceeds the rank bound",
            budget=rank_bound,
            required=lie_type.rank,
        )


def iter_weyl_elements(lie_type: LieType) -> Iterator[WeylElement]:
    _check_classical(lie_type)
    dim = lie_type.ambient_dim
    for permutation in itertools.permutations(range(dim)):
        if lie_type.family is Family.A:
            yield WeylElement(permutation, (1,) * dim)
            continue
        for signs in itertools.product((1, -1), repeat=dim):
            if lie_type.family is Family.D and signs.count(-1) % 2 == 1:
                continue
            yield WeylElement(permutation, signs)


@functools.cache
def _length_data(lie_type: LieType) -> tuple[tuple[tuple[int, ...], ...], tuple[Fraction, ...]]:
    roots = tuple(beta.doubled() for beta in positive_roots(lie_type))
    return roots, rho(lie_type).coords


def weyl_length(lie_type: LieType, w: WeylElement) -> int:
    """
    ℓ(w) = number of positive roots β with w(β) negative.
    """
    roots, rho_coords = _length_data(lie_type)
    length = 0
    for beta in roots:
        image = w.apply_vector(beta)
        if sum(a * b for a, b in zip(image, rho_coords)) < 0:
            length += 1
    return length


def all_weyl_elements(lie_type: LieType) -> list[WeylElement]:
    """
    The full Weyl group, sorted by length.
    """
    check_rank_bound(lie_type)
    return sorted(
        iter_weyl_elements(lie_type),
        key=lambda w: (weyl_length(lie_type, w), w),
    )


def reflection(lie_type: LieType, alpha: Weight) -> WeylElement:
    """
    The reflection s_α as a signed permutation.
    """
    _check_classical(lie_type)
    dim = lie_type.ambient_dim
    norm2 = alpha.norm2()
    permutation = [0] * dim
    signs = [1] * dim
    for k in range(dim):
        image = [Fraction(1 if i == k else 0) for i in range(dim)]
        factor = 2 * alpha[k] / norm2
        image = [a - factor * b for a, b in zip(image, alpha.coords)]
        nonzero = [i for i, a in enumerate(image) if a != 0]
        if len(nonzero) != 1 or abs(image[nonzero[0]]) != 1:
            raise PreconditionException(f"{alpha} is not a root of {lie_type}!")
        permutation[k] = nonzero[0]
        signs[k] = 1 if image[nonzero[0]] > 0 else -1
    return WeylElement(tuple(permutation), tuple(signs))


class BruhatTable:
    """
    The Bruhat order of one Weyl group as bitsets.

    up[i] has bit j set iff elements[i] ⪯_B elements[j].
    """

    def __init__(self, lie_type: LieType) -> None:
        check_rank_bound(lie_type)
        self.lie_type = lie_type
        self.elements = all_weyl_elements(lie_type)
        self.index = {w: i for i, w in enumerate(self.elements)}
        self.lengths = [weyl_length(lie_type, w) for w in self.elements]
        reflections = [reflection(lie_type, beta) for beta in positive_roots(lie_type)]
        self.up = [0] * len(self.elements)
        for i in range(len(self.elements) - 1, -1, -1):
            w = self.elements[i]
            bits = 1 << i
            for t in reflections:
                j = self.index[t.compose(w)]
                if self.lengths[j] > self.lengths[i]:
                    bits |= self.up[j]
            self.up[i] = bits
        self._chambers: dict[Weight, int] = {}
        logger.debug(f"Bruhat table of {lie_type}: {len(self.elements)} elements")

    def leq(self, w1: WeylElement, w2: WeylElement) -> bool:
        return bool(self.up[self.index[w1]] >> self.index[w2] & 1)

    def chamber_mask(self, nu: Weight) -> int:
        """
        Bitset of the w with ν in the closed chamber w h^+.
        """
        cached = self._chambers.get(nu)
        if cached is not None:
            return cached
        dominant = dominant_representative(self.lie_type, nu).coords
        target = nu.coords
        mask = 0
        for i, w in enumerate(self.elements):
            if w.apply_vector(dominant) == target:
                mask |= 1 << i
        self._chambers[nu] = mask
        return mask

    def up_closure(self, mask: int) -> int:
        """
        Bitset of all elements above some element of mask.
        """
        closure = 0
        while mask:
            low = mask & -mask
            closure |= self.up[low.bit_length() - 1]
            mask ^= low
        return closure


@functools.cache
def bruhat_table(lie_type: LieType) -> BruhatTable:
    return BruhatTable(lie_type)


def bruhat_leq(lie_type: LieType, w1: WeylElement, w2: WeylElement) -> bool:
    """
    w1 ⪯_B w2: transitive closure of w < s_α w for ℓ(s_α w) > ℓ(w).
    """
    return bruhat_table(lie_type).leq(w1, w2)
