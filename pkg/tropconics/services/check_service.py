from collections import Counter
from fractions import Fraction
from itertools import permutations
from typing import Iterable, List, Optional, Tuple
import logging
import random

from tropconics.core.exceptions import ConicError
from tropconics.models.geometry import PENDANT_DIRECTIONS, Chart, ConicTag
from tropconics.models.quadratic import MONOMIALS, QuadPoly, SymMatrix3
from tropconics.models.semiring import BOTTOM, TropScalar
from tropconics.schemas.check import CheckCase, CheckReport
from tropconics.services.conic_service import ConicService
from tropconics.services.corner_locus_service import CornerLocusService
from tropconics.services.factor_service import FactorService
from tropconics.services.quadratic_service import QuadraticService
from tropconics.utils.expression import format_poly

logger = logging.getLogger(__name__)

# Chance that a random off-diagonal coefficient is -inf.
BOTTOM_RATE = 0.125


class CheckService:
    @staticmethod
    def random_rational(rng: random.Random, max_abs: int, max_den: int, positive: bool = False) -> Fraction:
        den = rng.randint(1, max_den)
        low = 1 if positive else -max_abs * den
        return Fraction(rng.randint(low, max_abs * den), den)

    @staticmethod
    def random_poly(rng: random.Random, max_abs: int, max_den: int) -> QuadPoly:
        values = {}
        for mono in MONOMIALS:
            if not mono.is_square and rng.random() < BOTTOM_RATE:
                values[mono] = BOTTOM
            else:
                values[mono] = TropScalar(CheckService.random_rational(rng, max_abs, max_den))
        return QuadPoly.from_mapping(values)

    @staticmethod
    def canonical_d(rng: random.Random, tag: ConicTag, max_abs: int, max_den: int) -> Tuple[Fraction, ...]:
        """A d-vector in the canonical pattern of the given class."""
        def pos() -> Fraction:
            return CheckService.random_rational(rng, max_abs, max_den, positive=True)

        if tag == ConicTag.ONE_POINT_CENTRAL:
            return (pos(), pos(), pos())
        if tag == ConicTag.TWO_POINT_CENTRAL:
            u = pos()
            return (u + pos(), u + pos(), -u)
        if tag == ConicTag.DEGENERATE_1:
            u = pos()
            return (u, u + pos(), -u)
        if tag == ConicTag.DEGENERATE_2:
            x = pos()
            return (x, x, -x)
        if tag == ConicTag.PAIR_OF_LINES_ONE_ZERO:
            return (pos(), pos(), Fraction(0))
        if tag == ConicTag.PAIR_OF_LINES_TWO_ZEROS:
            return (pos(), Fraction(0), Fraction(0))
        return (Fraction(0), Fraction(0), Fraction(0))

    @staticmethod
    def forced_sample(rng: random.Random, tag: ConicTag, max_abs: int, max_den: int) -> QuadPoly:
        """Random polynomial of the given class: canonical shape, hidden zeros, translation, relabelling."""
        d1, d2, d3 = CheckService.canonical_d(rng, tag, max_abs, max_den)
        shape = {(2, 1): (d1 + d2) / 2, (3, 2): (d2 + d3) / 2, (3, 1): (d1 + d3) / 2}
        diag = [CheckService.random_rational(rng, max_abs, max_den) for _ in range(3)]
        entries = {}
        for (i, j), s in shape.items():
            if s == 0:
                choice = rng.randrange(3)
                if choice == 1:
                    s = -CheckService.random_rational(rng, max_abs, max_den, positive=True)
                elif choice == 2:
                    entries[f"a{i}{j}"] = BOTTOM
                    continue
            entries[f"a{i}{j}"] = TropScalar(s + (diag[i - 1] + diag[j - 1]) / 2)
        a = SymMatrix3(*(TropScalar(v) for v in diag), **entries)
        perm = rng.choice(list(permutations((1, 2, 3))))
        return QuadraticService.permute(QuadraticService.poly_of(a), perm)

    @staticmethod
    def corpus(seed: int, count: int, max_abs: int = 10, max_den: int = 4,
               per_tag: int = 10) -> List[QuadPoly]:
        rng = random.Random(seed)
        polys = [CheckService.random_poly(rng, max_abs, max_den) for _ in range(count)]
        for tag in ConicTag:
            polys.extend(CheckService.forced_sample(rng, tag, max_abs, max_den) for _ in range(per_tag))
        return polys

    @staticmethod
    def check_poly(p: QuadPoly) -> CheckCase:
        """Compare the closed-form vertices with the corner-locus oracle and run the factor checks."""
        problems: List[str] = []
        tag = ConicService.classify(ConicService.invariants_of(QuadraticService.matrix_of(p))).tag
        for chart in Chart:
            try:
                sketch = CornerLocusService.corner_locus(p, chart)
            except ConicError as exc:
                problems.append(f"chart {chart.value}: {exc.detail}")
                continue
            closed = [pt for pt, _ in ConicService.vertices(p, chart)]
            if closed != list(sketch.points):
                problems.append(f"chart {chart.value}: closed form {closed} != oracle {list(sketch.points)}")
            if chart == Chart.Z:
                census = Counter()
                for ray in sketch.rays:
                    census[ray.direction] += ray.weight
                if any(census[d] != 2 for d in PENDANT_DIRECTIONS):
                    problems.append(f"ray weight census {dict(census)}")
                if len(sketch.vertices) != ConicService.expected_vertex_count(tag):
                    problems.append(f"{tag.value} with {len(sketch.vertices)} vertices")
        try:
            factors = FactorService.factorize(p)
        except ConicError as exc:
            problems.append(exc.detail)
            factors = None
        if FactorService.is_reducible(p) != (factors is not None):
            problems.append("is_reducible disagrees with factorize")
        if factors is not None and not FactorService.conic_is_reducible(p):
            problems.append(f"factorizable polynomial classified as {tag.value}")
        return CheckCase(polynomial=format_poly(p), tag=tag.value, problems=problems)

    @staticmethod
    def run(polys: Iterable[QuadPoly], seed: Optional[int] = None) -> CheckReport:
        cases = [CheckService.check_poly(p) for p in polys]
        failures = [c for c in cases if not c.ok]
        for case in failures:
            logger.warning(f"check failed for {case.polynomial}: {'; '.join(case.problems)}")
        report = CheckReport(
            seed=seed,
            checked=len(cases),
            tags=dict(sorted(Counter(c.tag for c in cases).items())),
            failures=failures,
            ok=not failures,
        )
        logger.info(f"checked {report.checked} polynomials, {len(failures)} failures")
        return report
