"""
The primitive elements of Q ∩ h^+ for the exceptional types with a noncompact,
non quasi-split real form, with dim V_λ and dim V_λ^{l} per real form.

The E_6 rows marked with `mirror_of` are the images under the diagram
automorphism of the row they point to and carry the same dimensions.
"""

import dataclasses
import logging

from .util_lie_types import LieType
from .util_weight import Weight

logger = logging.getLogger(__file__)


@dataclasses.dataclass(frozen=True, repr=True, eq=True)
class PrimitiveRow:
    type_text: str
    fundamental: tuple[int, ...]
    """
    Coordinates of λ in the basis of the fundamental weights.
    """
    coordinates: str
    """
    λ in the e-coordinates of the ambient space.
    """
    dimension: int
    invariants: tuple[tuple[str, int], ...]
    """
    (form label, dim V_λ^{l(form)})
    """
    mirror_of: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        assert isinstance(self.type_text, str)
        assert isinstance(self.fundamental, tuple)
        assert isinstance(self.coordinates, str)
        assert isinstance(self.dimension, int)
        assert isinstance(self.invariants, tuple)
        assert isinstance(self.mirror_of, tuple | None)

    @property
    def lie_type(self) -> LieType:
        return LieType.factory(self.type_text)

    @property
    def weight(self) -> Weight:
        return Weight.factory(self.coordinates)

    def invariant_dim(self, label: str) -> int:
        return dict(self.invariants)[label]

    @property
    def text(self) -> str:
        return ",".join(str(x) for x in self.fundamental)


def _e6(
    fundamental: str,
    coordinates: str,
    dimension: int,
    eiii: int,
    eiv: int,
    mirror_of: str | None = None,
) -> PrimitiveRow:
    return PrimitiveRow(
        type_text="E6",
        fundamental=tuple(int(x) for x in fundamental.split(",")),
        coordinates=coordinates,
        dimension=dimension,
        invariants=(("EIII", eiii), ("EIV", eiv)),
        mirror_of=None if mirror_of is None else tuple(int(x) for x in mirror_of.split(",")),
    )


def _row(type_text: str, fundamental: str, coordinates: str, dimension: int, **invariants: int) -> PrimitiveRow:
    return PrimitiveRow(
        type_text=type_text,
        fundamental=tuple(int(x) for x in fundamental.split(",")),
        coordinates=coordinates,
        dimension=dimension,
        invariants=tuple(invariants.items()),
    )


PRIMITIVE_ROWS: tuple[PrimitiveRow, ...] = (
    _e6("0,0,0,0,0,3", "0,0,0,0,3,-1,-1,1", 3_003, 2, 1),
    _e6("3,0,0,0,0,0", "0,0,0,0,0,-2,-2,2", 3_003, 2, 1, mirror_of="0,0,0,0,0,3"),
    _e6("0,0,0,0,1,1", "0,0,0,1,2,-1,-1,1", 5_824, 8, 2),
    _e6(
        "1,0,1,0,0,0",
        "-1/2,1/2,1/2,1/2,1/2,-3/2,-3/2,3/2",
        5_824,
        8,
        2,
        mirror_of="0,0,0,0,1,1",
    ),
    _e6("0,0,0,0,3,0", "0,0,0,3,3,-2,-2,2", 1_559_376, 25, 1),
    _e6(
        "0,0,3,0,0,0",
        "-3/2,3/2,3/2,3/2,3/2,-5/2,-5/2,5/2",
        1_559_376,
        25,
        1,
        mirror_of="0,0,0,0,3,0",
    ),
    _e6("0,0,0,1,0,0", "0,0,1,1,1,-1,-1,1", 2_925, 8, 2),
    _e6("0,0,1,0,0,2", "-1/2,1/2,1/2,1/2,5/2,-3/2,-3/2,3/2", 78_975, 20, 3),
    _e6("2,0,0,0,1,0", "0,0,0,1,1,-2,-2,2", 78_975, 20, 3, mirror_of="0,0,1,0,0,2"),
    _e6("0,0,1,0,1,0", "-1/2,1/2,1/2,3/2,3/2,-3/2,-3/2,3/2", 70_070, 25, 3),
    _e6("0,0,2,0,0,1", "-1,1,1,1,2,-2,-2,2", 600_600, 41, 3),
    _e6("1,0,0,0,2,0", "0,0,0,2,2,-2,-2,2", 600_600, 41, 3, mirror_of="0,0,2,0,0,1"),
    _e6("0,1,0,0,0,0", "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2", 78, 3, 2),
    _e6("1,0,0,0,0,1", "0,0,0,0,1,-1,-1,1", 650, 6, 3),
    _row("E7", "0,0,0,0,0,0,2", "0,0,0,0,0,2,-1,1", 1_463, EVI=8, EVII=4),
    _row("E7", "0,0,0,0,0,1,0", "0,0,0,0,1,1,-1,1", 1_539, EVI=12, EVII=6),
    _row("E7", "0,0,0,0,1,0,1", "0,0,0,1,1,2,-2,2", 980_343, EVI=360, EVII=48),
    _row("E7", "0,0,0,0,2,0,0", "0,0,0,2,2,2,-3,3", 109_120_648, EVI=4_900, EVII=155),
    _row("E7", "0,0,0,1,0,0,0", "0,0,1,1,1,1,-2,2", 365_750, EVI=200, EVII=30),
    _row("E7", "0,0,1,0,0,0,0", "-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2", 8_645, EVI=26, EVII=9),
    _row("E7", "0,1,0,0,0,0,1", "1/2,1/2,1/2,1/2,1/2,3/2,-3/2,3/2", 40_755, EVI=60, EVII=16),
    _row(
        "E7", "0,1,0,0,1,0,0", "1/2,1/2,1/2,3/2,3/2,3/2,-5/2,5/2", 11_316_305, EVI=1_553, EVII=103
    ),
    _row("E7", "0,2,0,0,0,0,0", "1,1,1,1,1,1,-2,2", 253_935, EVI=111, EVII=15),
    _row("E7", "1,0,0,0,0,0,0", "0,0,0,0,0,0,-1,1", 133, EVI=4, EVII=3),
    _row("E8", "0,0,0,0,0,0,0,1", "0,0,0,0,0,0,1,1", 248, EIX=4),
    _row("E8", "0,0,0,0,0,0,1,0", "0,0,0,0,0,1,1,2", 30_380, EIX=26),
    _row("E8", "0,0,0,0,0,1,0,0", "0,0,0,0,1,1,1,3", 2_450_240, EIX=188),
    _row("E8", "0,0,0,0,1,0,0,0", "0,0,0,1,1,1,1,4", 146_325_270, EIX=1_383),
    _row("E8", "0,0,0,1,0,0,0,0", "0,0,1,1,1,1,1,5", 6_899_079_264, EIX=10_488),
    _row("E8", "0,0,1,0,0,0,0,0", "-1/2,1/2,1/2,1/2,1/2,1/2,1/2,7/2", 6_696_000, EIX=276),
    _row("E8", "0,1,0,0,0,0,0,0", "1/2,1/2,1/2,1/2,1/2,1/2,1/2,5/2", 147_250, EIX=43),
    _row("E8", "1,0,0,0,0,0,0,0", "0,0,0,0,0,0,0,2", 3_875, EIX=10),
    _row("F4", "0,0,0,1", "1,0,0,0", 26, FII=1),
    _row("F4", "0,0,1,0", "3/2,1/2,1/2,1/2", 273, FII=1),
    _row("F4", "0,1,0,0", "2,1,1,0", 1_274, FII=1),
    _row("F4", "1,0,0,0", "1,1,0,0", 52, FII=1),
)
"""
Ordered by type. The E_6 block lists 14 weights counting the mirrored ones.
"""


def primitive_rows(lie_type: LieType) -> list[PrimitiveRow]:
    return [row for row in PRIMITIVE_ROWS if row.lie_type == lie_type]
