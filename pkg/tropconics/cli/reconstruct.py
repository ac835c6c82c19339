import logging

import click

from tropconics.cli.common import echo_document
from tropconics.schemas.common import load_document
from tropconics.schemas.polynomial import polynomial_document
from tropconics.schemas.sketch import TreeDocument
from tropconics.services.quadratic_service import QuadraticService
from tropconics.services.reconstruct_service import ReconstructService
from tropconics.utils.expression import format_poly

logger = logging.getLogger(__name__)


@click.command()
@click.argument("tree_file", type=click.File("r"))
@click.option("--text", "as_text", is_flag=True, help="Print only the polynomial.")
def reconstruct(tree_file, as_text: bool):
    """Defining polynomial of the weighted tree in TREE_FILE (JSON, '-' for stdin)."""
    tree = load_document(TreeDocument, tree_file.read(), "tree").to_domain()
    p = QuadraticService.poly_of(ReconstructService.recover_polynomial(tree))
    text = format_poly(p)
    logger.info(f"reconstructed {text}")
    if as_text:
        click.echo(text)
    else:
        echo_document(polynomial_document(p, text))
