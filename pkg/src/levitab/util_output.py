import enum
import json
import logging
from collections.abc import Sequence
from typing import Any

from .util_jinja2 import JinjaEnv

logger = logging.getLogger(__file__)

Record = dict[str, Any]


class OutputFormat(str, enum.Enum):
    JSON = "json"
    """
    One object per line, keys sorted.
    """
    TSV = "tsv"
    TEXT = "text"


TEMPLATE_TEXT = """\
{% for record in records -%}
{% for key, value in record.items() -%}
{{ key }}: {{ value | cell }}
{% endfor -%}
{% if not loop.last %}
{% endif -%}
{% endfor -%}
"""
"""
key: value lines, a blank line between the records.
"""


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list | tuple | dict):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
    return str(value)


_JINJA_ENV = JinjaEnv(filters={"cell": _cell})


_TSV_ESCAPES = str.maketrans({"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"})
"""
Backslash escapes keep one record per line and one cell per tab.
"""


def _tsv_cell(value: Any) -> str:
    return _cell(value).translate(_TSV_ESCAPES)


def render_json(records: Sequence[Record]) -> str:
    return "".join(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n" for record in records)


def render_tsv(records: Sequence[Record]) -> str:
    """
    The header is the union of the keys of all records in order of first
    appearance, missing keys give empty cells.
    """
    if len(records) == 0:
        return ""
    header = list(records[0].keys())
    for record in records[1:]:
        header.extend(key for key in record if key not in header)
    lines = ["\t".join(_tsv_cell(key) for key in header)]
    for record in records:
        lines.append("\t".join(_tsv_cell(record.get(key)) for key in header))
    return "\n".join(lines) + "\n"


def render_text(records: Sequence[Record], template_text: str = TEMPLATE_TEXT) -> str:
    return _JINJA_ENV.render_string(template_text, records=records)


def render_records(
    records: Sequence[Record],
    output_format: OutputFormat,
    template_text: str = TEMPLATE_TEXT,
) -> str:
    match output_format:
        case OutputFormat.JSON:
            return render_json(records)
        case OutputFormat.TSV:
            return render_tsv(records)
        case OutputFormat.TEXT:
            return render_text(records, template_text)
    raise ValueError(f"Unknown output format {output_format}")
