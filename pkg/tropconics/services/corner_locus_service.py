"""Corner locus of a tropical quadric by exhaustive tie enumeration.

Does not use the closed-form vertex procedure in
:mod:`tropconics.services.conic_service`: it never looks at the shape
matrix, only at where two or more affine monomials share the maximum.
"""
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple
import logging

import networkx as nx

from tropconics.core.exceptions import OracleConsistencyError
from tropconics.models.geometry import Chart, Point2, Sketch, SketchEdge, SketchRay, SketchVertex
from tropconics.models.quadratic import Monomial, QuadPoly
from tropconics.services.conic_service import balance_defects, primitive
from tropconics.services.quadratic_service import AffineTerm, QuadraticService

logger = logging.getLogger(__name__)

# (maximizers, lower endpoint, upper endpoint, direction, weight)
_Cell = Tuple[FrozenSet[Monomial], Optional[Point2], Optional[Point2], Tuple[int, int], int]


def _value(term: AffineTerm, point: Point2) -> Fraction:
    _, c, (eu, ev) = term
    return c + eu * point[0] + ev * point[1]


def _solve_triple(a: AffineTerm, b: AffineTerm, c: AffineTerm) -> Optional[Point2]:
    """Point where three affine monomials agree, or None for a parallel system."""
    (_, ca, ea), (_, cb, eb), (_, cc, ec) = a, b, c
    n1 = (ea[0] - eb[0], ea[1] - eb[1])
    n2 = (ea[0] - ec[0], ea[1] - ec[1])
    r1, r2 = cb - ca, cc - ca
    det = n1[0] * n2[1] - n1[1] * n2[0]
    if det == 0:
        return None
    return (
        Fraction(r1 * n2[1] - r2 * n1[1], det),
        Fraction(n1[0] * r2 - n2[0] * r1, det),
    )


def _along(base: Point2, direction: Tuple[int, int], tau: Optional[Fraction]) -> Optional[Point2]:
    if tau is None:
        return None
    return (base[0] + tau * direction[0], base[1] + tau * direction[1])


def _lattice_length(maximizers: FrozenSet[Monomial], chart: Chart) -> int:
    first, second = chart.affine_indices
    exps = sorted((m.exponent[first - 1], m.exponent[second - 1]) for m in maximizers)
    lo, hi = exps[0], exps[-1]
    (_, _), length = primitive(Fraction(hi[0] - lo[0]), Fraction(hi[1] - lo[1]))
    return int(length)


def _clip_tie_line(terms: List[AffineTerm], a: AffineTerm, b: AffineTerm):
    """Parametrize the tie line of a and b as base + τ·u and clip it to where they dominate."""
    (_, ca, ea), (_, cb, eb) = a, b
    n = (ea[0] - eb[0], ea[1] - eb[1])
    r = cb - ca
    base = (Fraction(r, n[0]), Fraction(0)) if n[0] != 0 else (Fraction(0), Fraction(r, n[1]))
    direction, _ = primitive(Fraction(-n[1]), Fraction(n[0]))
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for term in terms:
        if term is a or term is b:
            continue
        _, _, em = term
        alpha = _value(term, base) - _value(a, base)
        beta = (em[0] - ea[0]) * direction[0] + (em[1] - ea[1]) * direction[1]
        if beta == 0:
            if alpha > 0:
                return None
            continue
        bound = Fraction(-alpha, beta)
        if beta > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    if lo is not None and hi is not None and lo >= hi:
        return None
    return base, direction, lo, hi


class CornerLocusService:
    @staticmethod
    def tie_vertices(p: QuadPoly, chart: Chart = Chart.Z) -> Dict[Point2, FrozenSet[Monomial]]:
        terms = QuadraticService.affine_terms(p, chart)
        found: Dict[Point2, FrozenSet[Monomial]] = {}
        for triple in combinations(terms, 3):
            point = _solve_triple(*triple)
            if point is None or point in found:
                continue
            evaluation = QuadraticService.eval(p, point, chart)
            if _value(triple[0], point) == evaluation.value.finite:
                found[point] = evaluation.maximizers
        logger.debug(f"tie enumeration: {len(terms)} finite terms, {len(found)} vertices")
        return found

    @staticmethod
    def tie_cells(p: QuadPoly, chart: Chart = Chart.Z) -> List[_Cell]:
        terms = QuadraticService.affine_terms(p, chart)
        cells: Dict[FrozenSet[Monomial], _Cell] = {}
        for a, b in combinations(terms, 2):
            clipped = _clip_tie_line(terms, a, b)
            if clipped is None:
                continue
            base, direction, lo, hi = clipped
            if lo is not None and hi is not None:
                tau = (lo + hi) / 2
            elif lo is not None:
                tau = lo + 1
            elif hi is not None:
                tau = hi - 1
            else:
                tau = Fraction(0)
            inside = _along(base, direction, tau)
            maximizers = QuadraticService.eval(p, inside, chart).maximizers
            if maximizers in cells:
                continue
            cells[maximizers] = (
                maximizers, _along(base, direction, lo), _along(base, direction, hi),
                direction, _lattice_length(maximizers, chart),
            )
        logger.debug(f"tie enumeration: {len(cells)} one-dimensional cells")
        return list(cells.values())

    @staticmethod
    def corner_locus(p: QuadPoly, chart: Chart = Chart.Z) -> Sketch:
        found = CornerLocusService.tie_vertices(p, chart)
        points = sorted(found)
        index = {pt: i for i, pt in enumerate(points)}

        def locate(pt: Point2, maximizers: FrozenSet[Monomial]) -> int:
            if pt not in index:
                labels = sorted(m.label for m in maximizers)
                raise OracleConsistencyError(f"Cell {labels} ends at {pt}, which is not a vertex")
            return index[pt]

        edges: List[SketchEdge] = []
        rays: List[SketchRay] = []
        for maximizers, start, end, direction, weight in CornerLocusService.tie_cells(p, chart):
            if start is None and end is None:
                labels = sorted(m.label for m in maximizers)
                raise OracleConsistencyError(f"Cell {labels} is a full line without a vertex")
            if start is not None and end is not None:
                u, v = sorted((locate(start, maximizers), locate(end, maximizers)))
                edges.append(SketchEdge(u=u, v=v, weight=weight))
            elif start is not None:
                rays.append(SketchRay(vertex=locate(start, maximizers), direction=direction, weight=weight))
            else:
                reverse = (-direction[0], -direction[1])
                rays.append(SketchRay(vertex=locate(end, maximizers), direction=reverse, weight=weight))

        sketch = Sketch(
            chart=chart,
            vertices=tuple(SketchVertex(point=pt, maximizers=found[pt]) for pt in points),
            edges=tuple(sorted(edges, key=lambda e: (e.u, e.v))),
            rays=tuple(sorted(rays, key=lambda r: (r.vertex, r.direction))),
        )
        CornerLocusService._require_tree(sketch)
        return sketch

    @staticmethod
    def _require_tree(sketch: Sketch) -> None:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(sketch.vertices)))
        graph.add_edges_from((e.u, e.v) for e in sketch.edges)
        if not sketch.vertices or not nx.is_tree(graph):
            raise OracleConsistencyError(
                f"Corner locus with {len(sketch.vertices)} vertices and {len(sketch.edges)} edges is not a tree"
            )
        defects = balance_defects(sketch.points, sketch.edges, sketch.rays)
        if defects:
            raise OracleConsistencyError(f"Corner locus is unbalanced at {[d.point for d in defects]}")
