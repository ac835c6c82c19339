from typing import Optional, Tuple
import logging

from tropconics.core.exceptions import InvariantViolation
from tropconics.models.geometry import LINE_PAIR_TAGS
from tropconics.models.quadratic import MONOMIALS, LinForm, QuadPoly
from tropconics.models.semiring import TropScalar
from tropconics.services.conic_service import ConicService
from tropconics.services.quadratic_service import QuadraticService

logger = logging.getLogger(__name__)

Factorization = Tuple[LinForm, LinForm]

# Order in which a tie for the largest shape entry is broken.
_PAIR_ORDER = ((2, 1), (3, 2), (3, 1))


class FactorService:
    @staticmethod
    def expand(f: LinForm, g: LinForm) -> QuadPoly:
        """Formal product f ⊙ g; rejects products without all three squares."""
        fc, gc = f.coefficients, g.coefficients
        values = {}
        for mono in MONOMIALS:
            i, j = mono.index
            if i == j:
                values[mono] = fc[i - 1] * gc[i - 1]
            else:
                values[mono] = fc[i - 1] * gc[j - 1] + fc[j - 1] * gc[i - 1]
        return QuadPoly.from_mapping(values)

    @staticmethod
    def is_reducible(p: QuadPoly) -> bool:
        s = QuadraticService.shape(QuadraticService.matrix_of(p))
        entries = s.off_diagonal
        if any(v.is_bottom or v.finite < 0 for v in entries):
            return False
        values = sorted(v.finite for v in entries)
        return values[2] == values[0] + values[1]

    @staticmethod
    def factorize(p: QuadPoly) -> Optional[Factorization]:
        """Two linear forms whose product is p, or None when p is irreducible.

        The factors of the shape polynomial have a zero coefficient on the
        larger index of the largest shape entry; conjugating by D(A) then adds
        a_ii/2 to the coefficient of variable i in both factors.
        """
        if not FactorService.is_reducible(p):
            logger.debug("factorize: shape entries fail the max = sum test")
            return None
        a = QuadraticService.matrix_of(p)
        s = QuadraticService.shape(a)
        high, low = max(_PAIR_ORDER, key=lambda pair: (s.entry(*pair).finite, -_PAIR_ORDER.index(pair)))
        third = next(k for k in (1, 2, 3) if k not in (high, low))
        shape_factor = [TropScalar(0)] * 3
        shape_factor[low - 1] = s.entry(low, high)
        shape_factor[third - 1] = s.entry(third, high)
        shift = QuadraticService.diag_of(a).entries
        f = LinForm(*(c * TropScalar(t) for c, t in zip(shape_factor, shift)))
        g = LinForm(*(c.inverse() * TropScalar(t) for c, t in zip(shape_factor, shift)))
        if FactorService.expand(f, g) != p:
            raise InvariantViolation(f"Factorization of {p} does not expand back to it")
        return f, g

    @staticmethod
    def conic_is_reducible(p: QuadPoly) -> bool:
        """C(p) is a union of two tropical lines, whether or not p factors."""
        inv = ConicService.invariants_of(QuadraticService.matrix_of(p))
        return ConicService.classify(inv).tag in LINE_PAIR_TAGS
