from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple
import logging

import networkx as nx

from tropconics.core.exceptions import ChartError, SeparationError, ShapeInputError
from tropconics.models.geometry import (
    EXPECTED_VERTEX_COUNT, IDENTITY, LINE_PAIR_TAGS, NON_DEGENERATE_TAGS, NORTH_EAST, SOUTH, WEST,
    BalanceDefect, BalanceReport, Chart, ConicClass, ConicTag, Direction, Invariants, Point2,
    ProjPoint, Separations, Sketch, SketchEdge, SketchRay, VertexLabel,
)
from tropconics.models.quadratic import Monomial, QuadPoly, SymMatrix3
from tropconics.models.semiring import ScalarLike, TropScalar, scalar
from tropconics.services.quadratic_service import QuadraticService

logger = logging.getLogger(__name__)

VertexEntry = Tuple[Point2, FrozenSet[Monomial]]

ANCHOR_ORDER = ("v0", "v1", "v2", "v3", "w1", "w2", "w3")


def _cycle(j: int, step: int) -> int:
    """Index arithmetic modulo 3 on {1, 2, 3}."""
    return (j - 1 + step) % 3 + 1


def primitive(dx: Fraction, dy: Fraction) -> Tuple[Direction, Fraction]:
    """Primitive integer direction of (dx, dy) and the factor with (dx, dy) = factor·direction."""
    dx, dy = Fraction(dx), Fraction(dy)
    if dx == 0 and dy == 0:
        raise ValueError("zero vector has no direction")
    scale = dx.denominator * dy.denominator // gcd(dx.denominator, dy.denominator)
    ix, iy = int(dx * scale), int(dy * scale)
    g = gcd(ix, iy)
    return (ix // g, iy // g), Fraction(g, scale)


def is_vertex_set(maximizers: Iterable[Monomial]) -> bool:
    """True when the tied exponents span a two-dimensional cell."""
    exps = [m.exponent for m in maximizers]
    if len(exps) < 3:
        return False
    base = exps[0]
    diffs = [tuple(e[k] - base[k] for k in range(3)) for e in exps[1:]]
    for i in range(len(diffs)):
        for j in range(i + 1, len(diffs)):
            a, b = diffs[i], diffs[j]
            cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
            if cross != (0, 0, 0):
                return True
    return False


def balance_defects(points: Sequence[Point2], edges: Iterable[SketchEdge],
                    rays: Iterable[SketchRay]) -> Tuple[BalanceDefect, ...]:
    totals: Dict[int, List[int]] = {i: [0, 0] for i in range(len(points))}
    for edge in edges:
        (ux, uy), (vx, vy) = points[edge.u], points[edge.v]
        (ex, ey), _ = primitive(vx - ux, vy - uy)
        totals[edge.u][0] += edge.weight * ex
        totals[edge.u][1] += edge.weight * ey
        totals[edge.v][0] -= edge.weight * ex
        totals[edge.v][1] -= edge.weight * ey
    for ray in rays:
        totals[ray.vertex][0] += ray.weight * ray.direction[0]
        totals[ray.vertex][1] += ray.weight * ray.direction[1]
    return tuple(
        BalanceDefect(vertex=i, point=points[i], total=(sx, sy))
        for i, (sx, sy) in sorted(totals.items())
        if (sx, sy) != (0, 0)
    )


class ConicService:
    @staticmethod
    def chart_embed(pt: Tuple[ScalarLike, ScalarLike], chart: Chart = Chart.Z) -> ProjPoint:
        coords = [TropScalar(0)] * 3
        for idx, value in zip(chart.affine_indices, pt):
            coords[idx - 1] = scalar(value)
        return ProjPoint(*coords)

    @staticmethod
    def chart_project(p: ProjPoint, chart: Chart = Chart.Z) -> Tuple[TropScalar, TropScalar]:
        pivot = p.coordinate(chart.index)
        if pivot.is_bottom:
            raise ChartError(f"Point {[str(c) for c in p.coords]} lies outside the {chart.value}=0 chart")
        return tuple(p.coordinate(i) * pivot.inverse() for i in chart.affine_indices)

    @staticmethod
    def affine_point(p: ProjPoint, chart: Chart = Chart.Z) -> Point2:
        """chart_project for interior points, as exact rationals."""
        u, v = ConicService.chart_project(p, chart)
        if u.is_bottom or v.is_bottom:
            raise ChartError(f"Point {[str(c) for c in p.coords]} is a boundary point")
        return (u.finite, v.finite)

    @staticmethod
    def invariants_of(a: SymMatrix3) -> Invariants:
        s_plus = QuadraticService.nonneg_shape(QuadraticService.shape(a))
        inv = Invariants.from_s_plus(*(v.finite for v in s_plus.off_diagonal))
        logger.debug(f"invariants: s+={inv.s_plus} d={inv.d}")
        return inv

    @staticmethod
    def classify(inv: Invariants) -> ConicClass:
        d = dict(zip((1, 2, 3), inv.d))
        negatives = [j for j in (1, 2, 3) if d[j] < 0]
        zeros = [j for j in (1, 2, 3) if d[j] == 0]
        if negatives:
            j = negatives[0]
            a, b = [k for k in (1, 2, 3) if k != j]
            vanishing = [k for k in (a, b) if inv.s(j, k) == 0]
            if not vanishing:
                return ConicClass(ConicTag.TWO_POINT_CENTRAL, (a, b, j))
            if len(vanishing) == 1:
                k = vanishing[0]
                other = b if k == a else a
                return ConicClass(ConicTag.DEGENERATE_1, (k, other, j))
            return ConicClass(ConicTag.DEGENERATE_2, (a, b, j))
        if not zeros:
            return ConicClass(ConicTag.ONE_POINT_CENTRAL, IDENTITY)
        if len(zeros) == 1:
            k = zeros[0]
            a, b = [i for i in (1, 2, 3) if i != k]
            return ConicClass(ConicTag.PAIR_OF_LINES_ONE_ZERO, (a, b, k))
        if len(zeros) == 2:
            k = next(i for i in (1, 2, 3) if i not in zeros)
            return ConicClass(ConicTag.PAIR_OF_LINES_TWO_ZEROS, (k, zeros[0], zeros[1]))
        return ConicClass(ConicTag.DOUBLE_LINE, IDENTITY)

    @staticmethod
    def anchor_points(s: SymMatrix3) -> Dict[str, ProjPoint]:
        """v0..v3 from the rows of shape(A)⁺, plus w^{j±1} for the negative d_j."""
        if not s.has_zero_diagonal or any(v.is_bottom or v.finite < 0 for v in s.off_diagonal):
            raise ShapeInputError("anchor_points needs a non-negative shape matrix shape(A)⁺")
        points = {
            f"v{i}": ProjPoint(*(TropScalar(-s.entry(i, j).finite) for j in (1, 2, 3)))
            for i in (1, 2, 3)
        }
        points["v0"] = ProjPoint(s.a32, s.a31, s.a21)
        inv = Invariants.from_s_plus(*(v.finite for v in s.off_diagonal))
        for j, dj in zip((1, 2, 3), inv.d):
            if dj >= 0:
                continue
            for i in (_cycle(j, -1), _cycle(j, 1)):
                shift = [TropScalar(0)] * 3
                shift[i - 1] = TropScalar(-2 * inv.s(i, j))
                points[f"w{i}"] = points[f"v{i}"].times(ProjPoint(*shift))
        return {name: points[name] for name in ANCHOR_ORDER if name in points}

    @staticmethod
    def arm_displacements(inv: Invariants) -> Tuple[Point2, Point2, Point2]:
        """v1−v0, v2−v0, v3−v0 in chart Z for shape(A)⁺."""
        return ((inv.d1, Fraction(0)), (Fraction(0), inv.d2), (-inv.d3, -inv.d3))

    @staticmethod
    def _surviving_anchors(p: QuadPoly) -> List[Tuple[str, ProjPoint]]:
        """Anchor points of shape(p)⁺ that are vertices of its conic, translated onto C(p)."""
        a = QuadraticService.matrix_of(p)
        s_plus = QuadraticService.nonneg_shape(QuadraticService.shape(a))
        model = QuadraticService.poly_of(s_plus)
        back = ProjPoint(*(TropScalar(-t) for t in QuadraticService.diag_of(a).entries))
        survivors = []
        for name, point in ConicService.anchor_points(s_plus).items():
            evaluation = QuadraticService.eval(model, ConicService.affine_point(point, Chart.Z), Chart.Z)
            if is_vertex_set(evaluation.maximizers):
                survivors.append((name, point.times(back)))
            else:
                logger.debug(f"anchor {name} dropped: maximizers {sorted(m.label for m in evaluation.maximizers)}")
        return survivors

    @staticmethod
    def vertices(p: QuadPoly, chart: Chart = Chart.Z) -> List[VertexEntry]:
        """Closed-form vertex set: surviving anchors of shape⁺ translated by −D(A).

        Charts X and Y move their variable into the Z slot first; the chart-Z
        coordinates of the permuted polynomial are this chart's coordinates.
        """
        if chart != Chart.Z:
            q = QuadraticService.permute(p, chart.to_chart_z)
            return [
                (point, QuadraticService.eval(p, point, chart).maximizers)
                for point, _ in ConicService.vertices(q, Chart.Z)
            ]
        seen = {}
        for _, point in ConicService._surviving_anchors(p):
            affine = ConicService.affine_point(point, Chart.Z)
            if affine not in seen:
                seen[affine] = QuadraticService.eval(p, affine, Chart.Z).maximizers
        return sorted(seen.items(), key=lambda item: item[0])

    @staticmethod
    def anchor_labels(p: QuadPoly, chart: Chart = Chart.Z) -> List[VertexLabel]:
        names: Dict[Point2, List[str]] = defaultdict(list)
        for name, point in ConicService._surviving_anchors(p):
            affine = ConicService.affine_point(point, chart)
            names[affine].append(name)
        return [VertexLabel(name="=".join(names[pt]), point=pt) for pt in sorted(names)]

    @staticmethod
    def check_balance(sk: Sketch) -> BalanceReport:
        return BalanceReport(defects=balance_defects(sk.points, sk.edges, sk.rays))

    @staticmethod
    def pendant_separations(sk: Sketch) -> Separations:
        bases: Dict[Direction, List[Point2]] = {WEST: [], SOUTH: [], NORTH_EAST: []}
        for ray in sk.rays:
            if ray.direction not in bases:
                raise SeparationError(f"Ray direction {ray.direction} is not a pendant direction of a conic")
            bases[ray.direction].extend([sk.vertices[ray.vertex].point] * ray.weight)
        for direction, points in bases.items():
            if len(points) != 2:
                raise SeparationError(
                    f"Expected total ray weight 2 in direction {direction}, got {len(points)}"
                )
        (wy1, wy2) = (pt[1] for pt in bases[WEST])
        (sx1, sx2) = (pt[0] for pt in bases[SOUTH])
        first, second = sorted(bases[NORTH_EAST])
        return Separations(
            ne_displacement=(second[0] - first[0], second[1] - first[1]),
            west_gap=abs(wy1 - wy2),
            south_gap=abs(sx1 - sx2),
        )

    @staticmethod
    def is_pair_of_lines(inv: Invariants) -> bool:
        return all(dj >= 0 for dj in inv.d) and any(dj == 0 for dj in inv.d)

    @staticmethod
    def v0_coincides(inv: Invariants) -> bool:
        """v0 ∈ {v1, v2, v3} for shape(A)⁺."""
        s_plus = SymMatrix3.shape_of(*inv.s_plus)
        anchors = ConicService.anchor_points(s_plus)
        return anchors["v0"] in (anchors["v1"], anchors["v2"], anchors["v3"])

    @staticmethod
    def is_shape_singular_class(c: ConicClass) -> bool:
        return c.tag in LINE_PAIR_TAGS or c.tag == ConicTag.ONE_POINT_CENTRAL

    @staticmethod
    def is_degenerate(c: ConicClass) -> bool:
        return c.tag not in NON_DEGENERATE_TAGS

    @staticmethod
    def expected_vertex_count(tag: ConicTag) -> int:
        return EXPECTED_VERTEX_COUNT[tag]

    @staticmethod
    def vertex_graph(points: Sequence[Point2], edges: Iterable[SketchEdge]) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(points)))
        graph.add_edges_from((e.u, e.v) for e in edges)
        return graph

    @staticmethod
    def tree_center(sk: Sketch) -> List[int]:
        graph = ConicService.vertex_graph(sk.points, sk.edges)
        if not nx.is_tree(graph):
            raise SeparationError("tree_center needs a sketch whose vertices form a tree")
        return sorted(nx.center(graph))
