import logging
import sys
from typing import Callable, List, Optional, Tuple, Type

import click

from tropconics.cli import check, classify, det, factor, reconstruct, sketch
from tropconics.core.config import settings
from tropconics.core.exceptions import (
    EXIT_DOMAIN_ERROR, EXIT_INVARIANT_VIOLATION, ConicError, DocumentError, ExpressionSyntaxError,
    InvariantViolation, TreeValidationError,
)

# Configure logging
logging.basicConfig(
    level=settings.log_level,
    format=settings.log_format
)
logger = logging.getLogger(__name__)


def invariant_violation_handler(exc: InvariantViolation) -> int:
    logger.error(f"Invariant violation: {exc.detail}")
    return exc.exit_code


def syntax_error_handler(exc: ExpressionSyntaxError) -> int:
    logger.error(f"Expression syntax error at {exc.line}:{exc.column}")
    return exc.exit_code


def tree_validation_handler(exc: TreeValidationError) -> int:
    logger.error(f"Tree rejected with {len(exc.violations)} violations")
    return exc.exit_code


def document_error_handler(exc: DocumentError) -> int:
    logger.error(f"Invalid {exc.kind} document")
    return exc.exit_code


def conic_error_handler(exc: ConicError) -> int:
    logger.error(f"Conic error: {exc.detail}")
    return exc.exit_code


# Most specific first.
EXCEPTION_HANDLERS: List[Tuple[Type[ConicError], Callable[..., int]]] = [
    (InvariantViolation, invariant_violation_handler),
    (ExpressionSyntaxError, syntax_error_handler),
    (TreeValidationError, tree_validation_handler),
    (DocumentError, document_error_handler),
    (ConicError, conic_error_handler),
]


def handle_error(exc: ConicError) -> int:
    for error_type, handler in EXCEPTION_HANDLERS:
        if isinstance(exc, error_type):
            code = handler(exc)
            break
    click.echo(f"Error: {exc.detail}", err=True)
    return code


class ConicGroup(click.Group):
    """Maps errors to exit codes: 1 for bad input, 2 for internal inconsistencies."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.exceptions.Abort):
            raise
        except click.ClickException as exc:
            exc.show()
            ctx.exit(EXIT_DOMAIN_ERROR)
        except ConicError as exc:
            ctx.exit(handle_error(exc))
        except Exception as exc:
            logger.error(f"Unexpected error: {exc!r}")
            click.echo(f"Error: unexpected {type(exc).__name__}: {exc}", err=True)
            ctx.exit(EXIT_INVARIANT_VIOLATION)


@click.group(cls=ConicGroup)
def cli():
    """Tropical conics: classify, sketch, factor and reconstruct degree-two tropical curves."""


cli.add_command(classify.classify)
cli.add_command(sketch.sketch)
cli.add_command(factor.factor)
cli.add_command(reconstruct.reconstruct)
cli.add_command(det.det)
cli.add_command(check.check)


def main(argv: Optional[List[str]] = None) -> None:
    cli.main(args=argv, prog_name="tropconics")


if __name__ == "__main__":
    main(sys.argv[1:])
