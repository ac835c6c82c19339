"""Text form of tropical quadrics.

Input accepts ``+``/``⊕`` for tropical sum and ``*``/``⊙`` for tropical
product, e.g. ``(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z``. A term
without a coefficient has coefficient 0, monomials left out are -inf, and
repeated monomials combine by max. Output is the canonical form that
:func:`parse_poly` reads back unchanged.
"""
from fractions import Fraction
from typing import Dict, List, Tuple
import logging

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from tropconics.core.exceptions import ConicError, DegreeError, ExpressionSyntaxError
from tropconics.models.quadratic import LinForm, Monomial, QuadPoly
from tropconics.models.semiring import BOTTOM, ZERO, TropScalar, format_scalar, parse_scalar, t_add

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    poly: term (_PLUS term)*

    term: coef _TIMES mono  -> weighted
        | mono              -> bare

    coef: RATIONAL                  -> plain
        | "(" RATIONAL ")"          -> plain
        | "(" SIGNED_RATIONAL ")"   -> plain
        | NEG_INF                   -> bottom
        | "(" NEG_INF ")"           -> bottom

    mono: factor (_TIMES factor)*
    factor: VAR ("^" RATIONAL)?

    _PLUS: "+" | "⊕"
    _TIMES: "*" | "⊙"
    NEG_INF: "-inf"
    SIGNED_RATIONAL: /[+-]\d+(\/\d+)?/
    RATIONAL: /\d+(\/\d+)?/
    VAR: "X" | "Y" | "Z"

    %import common.WS
    %ignore WS
"""

_VARIABLES = "XYZ"


class _PolyBuilder(Transformer):
    def plain(self, items):
        return parse_scalar(str(items[0]))

    def bottom(self, _items):
        return BOTTOM

    def factor(self, items):
        exponent = [0, 0, 0]
        power = 1
        if len(items) > 1:
            value = Fraction(str(items[1]))
            if value.denominator != 1:
                raise DegreeError(f"Exponent {items[1]} of {items[0]} is not an integer")
            power = int(value)
        exponent[_VARIABLES.index(str(items[0]))] = power
        return tuple(exponent)

    def mono(self, items):
        exponent = tuple(sum(e[k] for e in items) for k in range(3))
        if sum(exponent) != 2:
            raise DegreeError(f"Monomial with exponent {exponent} has degree {sum(exponent)}, expected 2")
        return Monomial.from_exponent(exponent)

    @v_args(inline=True)
    def weighted(self, coef, mono):
        return mono, coef

    @v_args(inline=True)
    def bare(self, mono):
        return mono, ZERO

    def poly(self, terms: List[Tuple[Monomial, TropScalar]]) -> QuadPoly:
        values: Dict[Monomial, TropScalar] = {}
        for mono, coef in terms:
            values[mono] = t_add(values.get(mono, BOTTOM), coef)
        return QuadPoly.from_mapping(values)


_parser = Lark(GRAMMAR, start="poly", parser="lalr")


def _syntax_error(text: str, exc: UnexpectedInput) -> ExpressionSyntaxError:
    if isinstance(exc, UnexpectedEOF) or getattr(exc, "line", -1) < 1:
        lines = text.splitlines() or [""]
        return ExpressionSyntaxError("unexpected end of input", len(lines), len(lines[-1]) + 1)
    message = "unexpected input"
    token = getattr(exc, "token", None)
    if token is not None and token.type == "$END":
        message = "unexpected end of input"
    elif token is not None:
        message = f"unexpected token {str(token)!r}"
    elif getattr(exc, "char", None):
        message = f"unexpected character {exc.char!r}"
    return ExpressionSyntaxError(message, exc.line, exc.column, exc.get_context(text).rstrip("\n"))


def parse_poly(text: str) -> QuadPoly:
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as exc:
        raise _syntax_error(text, exc)
    try:
        poly = _PolyBuilder().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ConicError):
            raise exc.orig_exc
        raise
    logger.debug(f"parsed {text!r} -> {format_poly(poly)}")
    return poly


def _format_coefficient(coef: TropScalar, label: str) -> str:
    if coef == ZERO:
        return label
    text = format_scalar(coef)
    if coef.finite < 0:
        text = f"({text})"
    return f"{text}*{label}"


def format_poly(p: QuadPoly) -> str:
    return " + ".join(_format_coefficient(c, m.label) for m, c in p.items() if c.is_finite)


def format_linform(f: LinForm) -> str:
    return " + ".join(
        _format_coefficient(c, var) for var, c in zip(_VARIABLES, f.coefficients) if c.is_finite
    )


def format_factorization(f: LinForm, g: LinForm) -> str:
    return f"({format_linform(f)}) * ({format_linform(g)})"
