import click

from tropconics.cli.common import echo_document
from tropconics.models.semiring import format_scalar
from tropconics.schemas.common import decode_json, load_document
from tropconics.schemas.polynomial import DetResultDocument, DetRowsDocument, DetSymmetricDocument
from tropconics.services.quadratic_service import QuadraticService


@click.command()
@click.argument("matrix_file", type=click.File("r"))
def det(matrix_file):
    """Tropical determinant of the 3x3 matrix in MATRIX_FILE.

    Accepts {"format": 1, "rows": [[...], [...], [...]]} or a symmetric
    matrix given by a11, a22, a33, a21, a32, a31.
    """
    data = decode_json(matrix_file.read(), "matrix")
    if isinstance(data, dict) and "rows" in data:
        rows = load_document(DetRowsDocument, data, "matrix").to_domain()
    else:
        rows = load_document(DetSymmetricDocument, data, "matrix").to_domain().rows()
    result = QuadraticService.trop_det(rows)
    echo_document(DetResultDocument(
        value=format_scalar(result.value), attained=result.attained, singular=result.singular,
    ))
