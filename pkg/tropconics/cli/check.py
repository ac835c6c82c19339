import logging
from typing import Optional

import click

from tropconics.cli.common import echo_document
from tropconics.core.config import settings
from tropconics.core.exceptions import OracleConsistencyError
from tropconics.services.check_service import CheckService
from tropconics.utils.expression import parse_poly

logger = logging.getLogger(__name__)


@click.command()
@click.argument("poly", required=False)
@click.option("--seed", type=int, default=lambda: settings.check_seed, show_default="CHECK_SEED")
@click.option("--count", type=click.IntRange(min=0), default=lambda: settings.check_count, show_default="CHECK_COUNT")
def check(poly: Optional[str], seed: int, count: int):
    """Compare closed-form vertices with the corner-locus oracle.

    With POLY, checks that polynomial; otherwise a seeded random corpus plus
    forced samples of every conic class.
    """
    if poly:
        report = CheckService.run([parse_poly(poly)])
    else:
        polys = CheckService.corpus(
            seed, count,
            max_abs=settings.check_max_abs,
            max_den=settings.check_max_denominator,
            per_tag=settings.check_degenerate_per_tag,
        )
        report = CheckService.run(polys, seed=seed)
    echo_document(report)
    if not report.ok:
        raise OracleConsistencyError(f"{len(report.failures)} of {report.checked} polynomials failed the check")
