from collections import Counter
from fractions import Fraction
from typing import List, Sequence, Tuple
import logging

import networkx as nx

from tropconics.core.exceptions import ReconstructionError, TreeValidationError
from tropconics.models.geometry import (
    NORTH_EAST, PENDANT_DIRECTIONS, SOUTH, WEST, Chart, ConicClass, Direction, Invariants, Point2,
    Sketch, TreeSpec, TreeVertex,
)
from tropconics.models.quadratic import QuadPoly, SymMatrix3
from tropconics.services.conic_service import ConicService, balance_defects
from tropconics.services.corner_locus_service import CornerLocusService
from tropconics.services.quadratic_service import QuadraticService, invert_permutation

logger = logging.getLogger(__name__)

MAX_TREE_VERTICES = 4


def _weighted_bases(t: TreeSpec, direction: Direction) -> List[Point2]:
    bases: List[Point2] = []
    for ray in t.rays:
        if ray.direction == direction:
            bases.extend([t.points[ray.vertex]] * ray.weight)
    return bases


def _gap_and_midpoint(values: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    first, second = values
    return abs(first - second) / 2, (first + second) / 2


def _cells(points: Sequence[Point2], edges, rays) -> Tuple[frozenset, Counter, Counter]:
    bounded = Counter()
    for e in edges:
        bounded[frozenset((points[e.u], points[e.v]))] += e.weight
    pendant = Counter()
    for r in rays:
        pendant[(points[r.vertex], r.direction)] += r.weight
    return frozenset(points), bounded, pendant


class ReconstructService:
    @staticmethod
    def tree_of_sketch(sk: Sketch) -> TreeSpec:
        return TreeSpec(
            chart=sk.chart,
            vertices=tuple(TreeVertex(id=f"n{i}", point=v.point) for i, v in enumerate(sk.vertices)),
            edges=sk.edges,
            rays=sk.rays,
        )

    @staticmethod
    def validate_tree(t: TreeSpec) -> TreeSpec:
        violations: List[str] = []
        n = len(t.vertices)
        if not 1 <= n <= MAX_TREE_VERTICES:
            violations.append(f"expected 1 to {MAX_TREE_VERTICES} vertices, got {n}")
        # Graph and balance checks need distinct points and valid indices.
        checkable = len(set(t.points)) == n
        if not checkable:
            violations.append("two vertices share the same point")
        for e in t.edges:
            if not (0 <= e.u < n and 0 <= e.v < n) or e.u == e.v:
                violations.append(f"edge ({e.u}, {e.v}) does not join two distinct vertices")
                checkable = False
            if e.weight not in (1, 2):
                violations.append(f"edge ({e.u}, {e.v}) has weight {e.weight}, expected 1 or 2")
        for r in t.rays:
            if not 0 <= r.vertex < n:
                violations.append(f"ray at unknown vertex {r.vertex}")
                checkable = False
            if r.weight not in (1, 2):
                violations.append(f"ray at vertex {r.vertex} has weight {r.weight}, expected 1 or 2")
            if r.direction not in PENDANT_DIRECTIONS:
                violations.append(
                    f"ray at vertex {r.vertex} has direction {r.direction}, expected one of {PENDANT_DIRECTIONS}"
                )
        census = Counter()
        for r in t.rays:
            census[r.direction] += r.weight
        for direction in PENDANT_DIRECTIONS:
            if census[direction] != 2:
                violations.append(f"total ray weight in direction {direction} is {census[direction]}, expected 2")

        if checkable and n:
            graph = nx.Graph()
            graph.add_nodes_from(range(n))
            graph.add_edges_from((e.u, e.v) for e in t.edges)
            if not nx.is_connected(graph):
                violations.append("vertices are not connected by bounded edges")
            elif not nx.is_tree(graph):
                violations.append("bounded edges contain a cycle")
            for defect in balance_defects(t.points, t.edges, t.rays):
                violations.append(f"unbalanced at vertex {defect.vertex} {defect.point}: sum {defect.total}")

        if violations:
            logger.debug(f"validate_tree: {len(violations)} violations")
            raise TreeValidationError(violations)
        return t

    @staticmethod
    def _read_rays(t: TreeSpec) -> Tuple[Tuple[Fraction, Fraction, Fraction], Point2]:
        """s⁺ and the translation read off the pendant ray lines, in chart coordinates."""
        s32, ty = _gap_and_midpoint([pt[1] for pt in _weighted_bases(t, WEST)])
        s31, tx = _gap_and_midpoint([pt[0] for pt in _weighted_bases(t, SOUTH)])
        s21, offset = _gap_and_midpoint([pt[0] - pt[1] for pt in _weighted_bases(t, NORTH_EAST)])
        if offset != tx - ty:
            raise ReconstructionError(
                f"North-east rays are centred on x - y = {offset}, but the west and south rays "
                f"put the centre at x - y = {tx - ty}"
            )
        return (s21, s32, s31), (tx, ty)

    @staticmethod
    def recover_invariants(t: TreeSpec) -> Tuple[Invariants, ConicClass]:
        """Invariants and class of the conic through the tree, in the tree's own chart labels."""
        ReconstructService.validate_tree(t)
        s_plus, _ = ReconstructService._read_rays(t)
        inv = Invariants.from_s_plus(*s_plus)
        if t.chart != Chart.Z:
            inv = inv.permuted(invert_permutation(t.chart.to_chart_z))
        conic_class = ConicService.classify(inv)
        expected = ConicService.expected_vertex_count(conic_class.tag)
        if len(t.vertices) != expected:
            raise ReconstructionError(
                f"Ray lines give a {conic_class.tag.value} conic with {expected} vertices, "
                f"but the tree has {len(t.vertices)}"
            )
        return inv, conic_class

    @staticmethod
    def recover_polynomial(t: TreeSpec) -> SymMatrix3:
        """Canonical matrix with s = s⁺ and the chart's diagonal entry 0."""
        ReconstructService.recover_invariants(t)
        (s21, s32, s31), (tx, ty) = ReconstructService._read_rays(t)
        a11, a22, a33 = -2 * tx, -2 * ty, Fraction(0)
        local = SymMatrix3.of(
            a11, a22, a33,
            s21 + (a11 + a22) / 2,
            s32 + (a22 + a33) / 2,
            s31 + (a11 + a33) / 2,
        )
        poly = QuadraticService.poly_of(local)
        if t.chart != Chart.Z:
            poly = QuadraticService.permute(poly, invert_permutation(t.chart.to_chart_z))
        ReconstructService._require_round_trip(t, poly)
        logger.debug(f"recover_polynomial: s+={(s21, s32, s31)} translation={(tx, ty)}")
        return QuadraticService.matrix_of(poly)

    @staticmethod
    def _require_round_trip(t: TreeSpec, poly: QuadPoly) -> None:
        sketch = CornerLocusService.corner_locus(poly, t.chart)
        if _cells(sketch.points, sketch.edges, sketch.rays) != _cells(t.points, t.edges, t.rays):
            raise ReconstructionError(
                f"The recovered polynomial's conic has vertices {list(sketch.points)}, "
                f"which does not reproduce the input tree"
            )
