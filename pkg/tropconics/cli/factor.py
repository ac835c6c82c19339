import logging

import click

from tropconics.cli.common import echo_document
from tropconics.schemas.polynomial import FactorizationDocument, LinFormDocument
from tropconics.services.factor_service import FactorService
from tropconics.utils.expression import format_factorization, format_poly, parse_poly

logger = logging.getLogger(__name__)

IRREDUCIBLE = "irreducible"


@click.command()
@click.argument("poly")
@click.option("--text", "as_text", is_flag=True, help="Print only the factors (or 'irreducible').")
def factor(poly: str, as_text: bool):
    """Factor POLY into two tropical linear forms."""
    p = parse_poly(poly)
    factors = FactorService.factorize(p)
    text = format_factorization(*factors) if factors else IRREDUCIBLE
    logger.info(f"factor {format_poly(p)}: {text}")
    if as_text:
        click.echo(text)
        return
    echo_document(FactorizationDocument(
        polynomial=format_poly(p),
        reducible=factors is not None,
        conic_is_reducible=FactorService.conic_is_reducible(p),
        factors=[LinFormDocument.from_domain(f) for f in factors] if factors else None,
        text=text,
    ))
