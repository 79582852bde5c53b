import enum
import logging
import re
import typing

from rich.style import Style

# https://github.com/Textualize/rich/blob/master/rich/color.py


class ColorTag(str, enum.Enum):
    COLOR_INFO = "COLOR_INFO"
    COLOR_SUCCESS = "COLOR_SUCCESS"
    COLOR_FAILED = "COLOR_FAILED"
    """
    A check group with counterexamples.
    """
    COLOR_ERROR = "COLOR_ERROR"

    @property
    def style(self) -> Style:
        return _DICT_STYLES[self]


_DICT_STYLES = {
    ColorTag.COLOR_INFO: Style(color="blue"),
    ColorTag.COLOR_SUCCESS: Style(color="green"),
    ColorTag.COLOR_FAILED: Style(color="orange1"),
    ColorTag.COLOR_ERROR: Style(color="red", bold=True),
}

_RE_TAG = re.compile(r"^\[(?P<tag>COLOR_[A-Z]+)\](?P<msg>.*)$", re.DOTALL)
"""
Example: [COLOR_SUCCESS]B2: 212 checks passed
tag: COLOR_SUCCESS
msg: B2: 212 checks passed
"""


def split_tag(msg: str) -> tuple[ColorTag | None, str]:
    """
    Unknown tags are left in the message.
    """
    match = _RE_TAG.match(msg)
    if match is None:
        return None, msg
    try:
        tag = ColorTag(match.group("tag"))
    except ValueError:
        return None, msg
    return tag, match.group("msg")


class ColorHandler(logging.StreamHandler):
    """
    Strips the color tag from the message and renders the line
    in the color of the tag if the stream is a tty.
    """

    @typing.override
    def format(self, record: logging.LogRecord) -> str:
        tag, msg = split_tag(str(record.msg))
        if tag is None:
            return super().format(record)
        # The record is shared with the other handlers
        stripped = logging.makeLogRecord(record.__dict__)
        stripped.msg = msg
        text = super().format(stripped)
        isatty = getattr(self.stream, "isatty", None)
        if isatty is not None and isatty():
            return tag.style.render(text)
        return text
