import logging

import click

from tropconics.cli.common import chart_option, echo_document
from tropconics.models.geometry import Chart
from tropconics.schemas.sketch import SketchDocument
from tropconics.services.conic_service import ConicService
from tropconics.services.corner_locus_service import CornerLocusService
from tropconics.utils.expression import parse_poly
from tropconics.utils.render import render_ascii, render_svg

logger = logging.getLogger(__name__)


@click.command()
@click.argument("poly")
@chart_option
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False, writable=True),
              help="Also write an SVG drawing here.")
@click.option("--ascii", "as_ascii", is_flag=True, help="Print a character drawing instead of JSON.")
def sketch(poly: str, chart: Chart, svg_path: str, as_ascii: bool):
    """Corner locus of POLY as a weighted tree."""
    p = parse_poly(poly)
    sk = CornerLocusService.corner_locus(p, chart)
    labels = {label.point: label.name for label in ConicService.anchor_labels(p, chart)}
    if svg_path:
        with open(svg_path, "w", encoding="utf-8") as handle:
            handle.write(render_svg(sk, labels))
        logger.info(f"wrote {svg_path}")
    if as_ascii:
        click.echo(render_ascii(sk, labels), nl=False)
    else:
        echo_document(SketchDocument.from_domain(sk, labels))
