from __future__ import annotations

import itertools
import sys
from collections.abc import Iterator

import pytest

from levitab.util_lie_types import LieType
from levitab.util_root_data import weight_from_fundamental
from levitab.util_weight import Weight
from levitab.util_young_a import YoungDiagram


def is_debugger_connected() -> bool:
    # pylint: disable=no-member
    return sys.monitoring.get_tool(sys.monitoring.DEBUGGER_ID) is not None


if is_debugger_connected():
    # Break into the debugger instead of reporting the exception later

    @pytest.hookimpl(tryfirst=True)
    def pytest_exception_interact(node, call, report):
        raise call.excinfo.value

    @pytest.hookimpl(tryfirst=True)
    def pytest_internalerror(excrepr, excinfo):
        raise excinfo.value


def iter_partitions(size: int, max_part: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    if max_rows == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in iter_partitions(size - first, first, max_rows - 1):
            yield (first,) + rest


def iter_diagrams(max_boxes: int, order: int) -> Iterator[YoungDiagram]:
    """
    All diagrams of the given order with at most max_boxes boxes.
    """
    for size in range(max_boxes + 1):
        for rows in iter_partitions(size, size, order):
            yield YoungDiagram.of(rows, order=order)


@pytest.fixture
def thickness_two_skew() -> tuple[YoungDiagram, YoungDiagram]:
    """
    A skew diagram of thickness 2 with bridges (2,0,3,2,1,0).
    """
    return (
        YoungDiagram.of((15, 13, 10, 6, 4, 2)),
        YoungDiagram.of((12, 12, 7, 3, 0, 0)),
    )


def iter_dominant_weights(lie_type: LieType, label_sum: int) -> Iterator[Weight]:
    """
    All dominant integral weights whose fundamental coordinates sum to at most label_sum.
    """
    for labels in itertools.product(range(label_sum + 1), repeat=lie_type.rank):
        if sum(labels) <= label_sum:
            yield weight_from_fundamental(lie_type, labels)
