from __future__ import annotations

import dataclasses
import fractions
import logging
from collections.abc import Iterable, Sequence

from .util_baseclasses import ParseException

logger = logging.getLogger(__file__)

Fraction = fractions.Fraction


def _to_fraction(value: int | Fraction | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclasses.dataclass(frozen=True, repr=True, eq=True, order=True)
class Weight:
    """
    An element of h* in the Bourbaki e-coordinates, exact rationals.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        assert isinstance(self.coords, tuple)
        for c in self.coords:
            assert isinstance(c, Fraction), c

    @staticmethod
    def of(values: Iterable[int | Fraction | str]) -> Weight:
        return Weight(tuple(_to_fraction(v) for v in values))

    @staticmethod
    def zero(dim: int) -> Weight:
        return Weight(tuple(Fraction(0) for _ in range(dim)))

    @staticmethod
    def factory(text: str) -> Weight:
        """
        Example: "3/2,1/2,1/2,1/2" or "1,0,-1"
        """
        tokens = [t.strip() for t in text.split(",")]
        if len(tokens) == 0 or any(t == "" for t in tokens):
            raise ParseException("Not a weight", text)
        try:
            return Weight(tuple(Fraction(t) for t in tokens))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseException("Not a weight", text) from e

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: Weight) -> Weight:
        assert len(self.coords) == len(other.coords)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        assert len(self.coords) == len(other.coords)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def scale(self, factor: int | Fraction) -> Weight:
        return Weight(tuple(a * factor for a in self.coords))

    def dot(self, other: Weight) -> Fraction:
        assert len(self.coords) == len(other.coords)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def norm2(self) -> Fraction:
        return self.dot(self)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def get(self, index: int) -> Fraction:
        """
        λ_index with index starting at 1; 0 beyond the last coordinate.
        """
        if index < 1 or index > len(self.coords):
            return Fraction(0)
        return self.coords[index - 1]

    def doubled(self) -> tuple[int, ...]:
        """
        2λ as integers; the caller guarantees that the denominators divide 2.
        """
        values = [2 * c for c in self.coords]
        assert all(v.denominator == 1 for v in values), self
        return tuple(int(v) for v in values)

    @staticmethod
    def from_doubled(values: Sequence[int]) -> Weight:
        return Weight(tuple(Fraction(v, 2) for v in values))

    @property
    def text(self) -> str:
        return ",".join(str(c) for c in self.coords)

    def __str__(self) -> str:
        return "(" + self.text + ")"
