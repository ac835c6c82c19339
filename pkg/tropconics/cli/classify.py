import logging

import click

from tropconics.cli.common import chart_option, echo_document
from tropconics.models.geometry import Chart
from tropconics.models.quadratic import Monomial
from tropconics.models.semiring import format_rational
from tropconics.schemas.classification import ClassificationDocument, InvariantsDocument
from tropconics.schemas.sketch import SketchVertexDocument
from tropconics.services.conic_service import ConicService
from tropconics.services.quadratic_service import QuadraticService
from tropconics.utils.expression import format_poly, parse_poly

logger = logging.getLogger(__name__)


@click.command()
@click.argument("poly")
@chart_option
def classify(poly: str, chart: Chart):
    """Classify the conic of POLY and list its vertices."""
    p = parse_poly(poly)
    inv = ConicService.invariants_of(QuadraticService.matrix_of(p))
    conic_class = ConicService.classify(inv)
    labels = {label.point: label.name for label in ConicService.anchor_labels(p, chart)}
    vertices = [
        SketchVertexDocument(
            x=format_rational(point[0]),
            y=format_rational(point[1]),
            maximizers=[m.label for m in Monomial if m in maximizers],
            label=labels.get(point),
        )
        for point, maximizers in ConicService.vertices(p, chart)
    ]
    logger.info(f"classified {format_poly(p)} as {conic_class.tag.value}")
    echo_document(ClassificationDocument(
        polynomial=format_poly(p),
        chart=chart.value,
        tag=conic_class.tag.value,
        perm=list(conic_class.perm),
        invariants=InvariantsDocument.from_domain(inv),
        pair_of_lines=ConicService.is_pair_of_lines(inv),
        degenerate=ConicService.is_degenerate(conic_class),
        shape_singular=ConicService.is_shape_singular_class(conic_class),
        vertices=vertices,
    ))
