from fractions import Fraction
from itertools import permutations
from typing import List, Sequence, Tuple
import logging

from tropconics.core.exceptions import ShapeInputError
from tropconics.models.geometry import Chart, Permutation, Point2
from tropconics.models.quadratic import (
    MONOMIALS, DetResult, DiagTranslation, Evaluation, Matrix3, Monomial,
    QuadPoly, SymMatrix3,
)
from tropconics.models.semiring import ZERO, TropScalar, nonneg_part, t_prod, t_sum

logger = logging.getLogger(__name__)

AffineTerm = Tuple[Monomial, Fraction, Tuple[int, int]]

_HALF = Fraction(1, 2)


def invert_permutation(perm: Permutation) -> Permutation:
    inverse = [0, 0, 0]
    for k, target in enumerate(perm, start=1):
        inverse[target - 1] = k
    return tuple(inverse)


class QuadraticService:
    @staticmethod
    def matrix_of(p: QuadPoly) -> SymMatrix3:
        return SymMatrix3(**{mono.key: coef for mono, coef in p.items()})

    @staticmethod
    def poly_of(a: SymMatrix3) -> QuadPoly:
        return QuadPoly(tuple(getattr(a, mono.key) for mono in MONOMIALS))

    @staticmethod
    def diag_of(a: SymMatrix3) -> DiagTranslation:
        return DiagTranslation(*(v * _HALF for v in a.diagonal))

    @staticmethod
    def translate(a: SymMatrix3, t: DiagTranslation) -> SymMatrix3:
        """D ⊙ A ⊙ D for D = diag(t): a_ij ↦ a_ij + t_i + t_j."""
        shift = t.entries
        values = {}
        for mono in MONOMIALS:
            i, j = mono.index
            values[mono.key] = getattr(a, mono.key) * TropScalar(shift[i - 1] + shift[j - 1])
        return SymMatrix3(**values)

    @staticmethod
    def shape(a: SymMatrix3) -> SymMatrix3:
        """S = D⁻¹ ⊙ A ⊙ D⁻¹: zero diagonal, s_ij = a_ij − (a_ii + a_jj)/2."""
        s = QuadraticService.translate(a, QuadraticService.diag_of(a).inverse())
        logger.debug(f"shape: s21={s.a21} s32={s.a32} s31={s.a31}")
        return s

    @staticmethod
    def nonneg_shape(a: SymMatrix3) -> SymMatrix3:
        if not a.has_zero_diagonal:
            raise ShapeInputError(
                f"nonneg_shape needs a shape matrix (zero diagonal), got diagonal "
                f"{tuple(str(v) for v in a.diagonal)}; normalize with shape() first"
            )
        return SymMatrix3(ZERO, ZERO, ZERO, *(nonneg_part(v) for v in a.off_diagonal))

    @staticmethod
    def trop_matmul(m1: Sequence[Sequence[TropScalar]], m2: Sequence[Sequence[TropScalar]]) -> Matrix3:
        return [
            [t_sum(m1[i][k] * m2[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)
        ]

    @staticmethod
    def trop_det(m: Sequence[Sequence[TropScalar]]) -> DetResult:
        """max over S3 of Σ m[i][σ(i)], with the number of maximizing permutations."""
        sums = [t_prod(m[i][sigma[i]] for i in range(3)) for sigma in permutations(range(3))]
        value = t_sum(sums)
        return DetResult(value=value, attained=sum(1 for v in sums if v == value))

    @staticmethod
    def singular(m: Sequence[Sequence[TropScalar]]) -> bool:
        return QuadraticService.trop_det(m).singular

    @staticmethod
    def permute(p: QuadPoly, perm: Permutation) -> QuadPoly:
        """Rename variables: variable k of the result is variable perm[k] of p."""
        values = {}
        for mono in MONOMIALS:
            i, j = mono.index
            values[mono] = p.coefficient(Monomial.from_index(perm[i - 1], perm[j - 1]))
        return QuadPoly.from_mapping(values)

    @staticmethod
    def affine_terms(p: QuadPoly, chart: Chart) -> List[AffineTerm]:
        """Finite monomials as affine functions c + e·(u, v) of the chart coordinates."""
        first, second = chart.affine_indices
        terms = []
        for mono, coef in p.items():
            if coef.is_bottom:
                continue
            exponent = mono.exponent
            terms.append((mono, coef.finite, (exponent[first - 1], exponent[second - 1])))
        return terms

    @staticmethod
    def eval(p: QuadPoly, point: Point2, chart: Chart = Chart.Z) -> Evaluation:
        u, v = point
        values = {
            mono: c + e[0] * u + e[1] * v
            for mono, c, e in QuadraticService.affine_terms(p, chart)
        }
        top = max(values.values())
        return Evaluation(
            value=TropScalar(top),
            maximizers=frozenset(m for m, val in values.items() if val == top),
        )

    @staticmethod
    def shape_plus_poly(p: QuadPoly) -> QuadPoly:
        a = QuadraticService.matrix_of(p)
        return QuadraticService.poly_of(QuadraticService.nonneg_shape(QuadraticService.shape(a)))

