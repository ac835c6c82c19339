from typing import Optional

import click
from pydantic import BaseModel

from tropconics.core.config import settings
from tropconics.core.exceptions import ChartError
from tropconics.models.geometry import Chart


class ChartType(click.ParamType):
    name = "chart"

    def convert(self, value, param, ctx) -> Chart:
        if isinstance(value, Chart):
            return value
        try:
            return Chart.parse(value)
        except ChartError as exc:
            self.fail(exc.detail, param, ctx)


def chart_option(func):
    return click.option(
        "--chart",
        type=ChartType(),
        default=lambda: settings.default_chart,
        show_default="DEFAULT_CHART",
        help="Affine chart X, Y or Z (the coordinate set to 0).",
    )(func)


def echo_document(document: BaseModel, path: Optional[str] = None) -> None:
    payload = document.model_dump_json(indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    else:
        click.echo(payload)
