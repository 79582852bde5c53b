from collections.abc import Callable, Mapping
from typing import Any

import jinja2


class JinjaEnv:
    def __init__(self, filters: Mapping[str, Callable[[Any], str]] | None = None) -> None:
        self.env = jinja2.Environment(
            undefined=jinja2.StrictUndefined,
            extensions=["jinja2.ext.loopcontrols"],
            keep_trailing_newline=True,
            autoescape=False,
        )
        self.env.filters.update(filters or {})

    def render_string(self, template_text: str, **kwargs) -> str:
        template = self.env.from_string(template_text)
        rendered_text = template.render(**kwargs)
        return rendered_text
