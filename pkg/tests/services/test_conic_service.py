from fractions import Fraction

import pytest
from hypothesis import given, settings

from tropconics.core.exceptions import ChartError, SeparationError, ShapeInputError
from tropconics.models.geometry import (
    Chart, ConicClass, ConicTag, Invariants, ProjPoint, Sketch, SketchEdge, SketchRay, SketchVertex, point2,
)
from tropconics.models.quadratic import Monomial, SymMatrix3
from tropconics.models.semiring import BOTTOM, TropScalar
from tropconics.services.conic_service import ConicService, is_vertex_set, primitive
from tropconics.services.corner_locus_service import CornerLocusService
from tropconics.services.quadratic_service import QuadraticService
from tests.strategies import any_forced_polys, charts, corpus_polys, forced_polys, matrices, nonneg_shapes


def classify_poly(p):
    return ConicService.classify(ConicService.invariants_of(QuadraticService.matrix_of(p)))


def chart_z(p: ProjPoint):
    return ConicService.affine_point(p, Chart.Z)


def test_chart_embed_and_project():
    assert ConicService.chart_embed((4, 2), Chart.Z) == ProjPoint.of(4, 2, 0)
    assert ConicService.chart_embed((1, 1), Chart.Z) == ProjPoint.of(0, 0, -1)
    assert ConicService.chart_embed((3, 5), Chart.X) == ProjPoint.of(0, 3, 5)
    u, v = ConicService.chart_project(ProjPoint.of(2, Fraction(5, 2), 0), Chart.Z)
    assert (u, v) == (TropScalar(2), TropScalar(Fraction(5, 2)))


def test_chart_project_boundary():
    u, v = ConicService.chart_project(ProjPoint.of(0, "-inf", 1), Chart.Z)
    assert (u, v) == (TropScalar(-1), BOTTOM)
    with pytest.raises(ChartError):
        ConicService.chart_project(ProjPoint.of(0, 0, "-inf"), Chart.Z)
    with pytest.raises(ChartError):
        ConicService.affine_point(ProjPoint.of(0, "-inf", 1), Chart.Z)


@given(corpus_polys(), charts)
def test_embed_project_round_trip(p, chart):
    for point, _ in ConicService.vertices(p, chart):
        assert ConicService.affine_point(ConicService.chart_embed(point, chart), chart) == point


@pytest.mark.parametrize("s_plus, tag, perm", [
    ((1, 1, 1), ConicTag.ONE_POINT_CENTRAL, (1, 2, 3)),
    ((3, 1, 1), ConicTag.TWO_POINT_CENTRAL, (1, 2, 3)),
    ((1, 3, 1), ConicTag.TWO_POINT_CENTRAL, (2, 3, 1)),
    ((2, 1, 0), ConicTag.DEGENERATE_1, (1, 2, 3)),
    ((0, 0, 2), ConicTag.DEGENERATE_2, (1, 3, 2)),
    ((1, Fraction(1, 2), Fraction(1, 2)), ConicTag.PAIR_OF_LINES_ONE_ZERO, (1, 2, 3)),
    ((1, 0, 1), ConicTag.PAIR_OF_LINES_TWO_ZEROS, (1, 2, 3)),
    ((0, 0, 0), ConicTag.DOUBLE_LINE, (1, 2, 3)),
])
def test_classify(s_plus, tag, perm):
    assert ConicService.classify(Invariants.from_s_plus(*s_plus)) == ConicClass(tag, perm)


def test_classify_examples(ex1_poly, ex2_poly):
    assert classify_poly(ex1_poly) == ConicClass(ConicTag.DEGENERATE_2, (1, 3, 2))
    assert classify_poly(ex2_poly) == ConicClass(ConicTag.PAIR_OF_LINES_TWO_ZEROS, (1, 2, 3))


@settings(max_examples=500)
@given(matrices())
def test_at_most_one_negative_d(a):
    inv = ConicService.invariants_of(a)
    assert sum(1 for dj in inv.d if dj < 0) <= 1


@given(nonneg_shapes())
def test_classification_is_permutation_invariant(s):
    inv = ConicService.invariants_of(s)
    for perm in ((2, 1, 3), (3, 1, 2), (2, 3, 1)):
        assert ConicService.classify(inv.permuted(perm)).tag == ConicService.classify(inv).tag


@given(nonneg_shapes())
def test_perm_puts_class_in_canonical_pattern(s):
    inv = ConicService.invariants_of(s)
    conic_class = ConicService.classify(inv)
    canonical = inv.permuted(conic_class.perm)
    d1, d2, d3 = canonical.d
    if conic_class.tag in (ConicTag.TWO_POINT_CENTRAL, ConicTag.DEGENERATE_1, ConicTag.DEGENERATE_2):
        assert d3 < 0 < d1 and d2 > 0
    if conic_class.tag == ConicTag.DEGENERATE_1:
        assert canonical.s31p == 0 < canonical.s32p
    if conic_class.tag == ConicTag.PAIR_OF_LINES_ONE_ZERO:
        assert d1 > 0 and d2 > 0 and d3 == 0
    if conic_class.tag == ConicTag.PAIR_OF_LINES_TWO_ZEROS:
        assert d1 > 0 and d2 == d3 == 0


def test_anchor_points_one_point_central():
    anchors = ConicService.anchor_points(SymMatrix3.shape_of(1, 1, 1))
    assert list(anchors) == ["v0", "v1", "v2", "v3"]
    assert [chart_z(p) for p in anchors.values()] == [point2(0, 0), point2(1, 0), point2(0, 1), point2(-1, -1)]


def test_anchor_points_two_point_central():
    anchors = ConicService.anchor_points(SymMatrix3.shape_of(3, 1, 1))
    assert list(anchors) == ["v0", "v1", "v2", "v3", "w1", "w2"]
    assert chart_z(anchors["v1"]) == point2(1, -2)
    assert chart_z(anchors["v2"]) == point2(-2, 1)
    assert chart_z(anchors["w1"]) == point2(-1, -2)
    assert chart_z(anchors["w2"]) == point2(-2, -1)


def test_anchor_points_need_nonneg_shape():
    with pytest.raises(ShapeInputError):
        ConicService.anchor_points(SymMatrix3.shape_of(-1, 0, 0))
    with pytest.raises(ShapeInputError):
        ConicService.anchor_points(SymMatrix3.of(1, 0, 0, 0, 0, 0))


@settings(max_examples=500)
@given(nonneg_shapes())
def test_arm_displacements(s):
    inv = ConicService.invariants_of(s)
    anchors = {name: chart_z(p) for name, p in ConicService.anchor_points(s).items()}
    v0 = anchors["v0"]
    arms = [(anchors[f"v{i}"][0] - v0[0], anchors[f"v{i}"][1] - v0[1]) for i in (1, 2, 3)]
    assert tuple(arms) == ConicService.arm_displacements(inv)


@given(nonneg_shapes())
def test_v1_is_a_triple_tie_when_all_d_positive(s):
    inv = ConicService.invariants_of(s)
    if not all(dj > 0 for dj in inv.d):
        return
    model = QuadraticService.poly_of(s)
    v1 = chart_z(ConicService.anchor_points(s)["v1"])
    evaluation = QuadraticService.eval(model, v1)
    assert evaluation.maximizers == {Monomial.XX, Monomial.XY, Monomial.XZ}
    assert evaluation.value == TropScalar(2 * inv.s31p)


@given(nonneg_shapes())
def test_v0_coincides_iff_pair_of_lines(s):
    inv = ConicService.invariants_of(s)
    if any(dj < 0 for dj in inv.d):
        return
    assert ConicService.v0_coincides(inv) == ConicService.is_pair_of_lines(inv)


def test_vertices_first_example(ex1_poly):
    vertices = ConicService.vertices(ex1_poly)
    assert [pt for pt, _ in vertices] == [point2(0, 0), point2(4, 2)]
    assert vertices[0][1] == {Monomial.YY, Monomial.ZZ, Monomial.YZ, Monomial.XZ}
    assert vertices[1][1] == {Monomial.XX, Monomial.YY, Monomial.XY, Monomial.XZ}


def test_vertices_second_example(ex2_poly):
    assert [pt for pt, _ in ConicService.vertices(ex2_poly)] == [point2(-1, -6), point2(1, -6)]


def test_vertices_double_line(double_line_poly):
    assert [pt for pt, _ in ConicService.vertices(double_line_poly)] == [point2(0, 0)]


def test_anchor_labels(ex1_poly, central_poly):
    labels = ConicService.anchor_labels(ex1_poly)
    assert [(label.name, label.point) for label in labels] == [("v3=w3", point2(0, 0)), ("v1=w1", point2(4, 2))]
    names = [label.name for label in ConicService.anchor_labels(central_poly)]
    assert names == ["v3", "v0", "v2", "v1"]


@settings(max_examples=500)
@given(corpus_polys(), charts)
def test_vertices_match_corner_locus(p, chart):
    closed = [pt for pt, _ in ConicService.vertices(p, chart)]
    assert closed == list(CornerLocusService.corner_locus(p, chart).points)


@settings(max_examples=200)
@given(any_forced_polys())
def test_vertex_count_matches_class(p):
    tag = classify_poly(p).tag
    assert len(ConicService.vertices(p)) == ConicService.expected_vertex_count(tag)


@given(forced_polys(ConicTag.DEGENERATE_1))
def test_degenerate_one_has_three_vertices(p):
    assert len(ConicService.vertices(p)) == 3


def test_is_vertex_set():
    assert is_vertex_set([Monomial.XX, Monomial.XY, Monomial.XZ])
    assert not is_vertex_set([Monomial.XX, Monomial.XY])
    assert not is_vertex_set([Monomial.XX, Monomial.XY, Monomial.YY])


def test_primitive():
    assert primitive(Fraction(4), Fraction(2)) == ((2, 1), Fraction(2))
    assert primitive(Fraction(-3, 2), Fraction(0)) == ((-1, 0), Fraction(3, 2))
    assert primitive(Fraction(1, 2), Fraction(1, 3)) == ((3, 2), Fraction(1, 6))
    with pytest.raises(ValueError):
        primitive(Fraction(0), Fraction(0))


def test_check_balance(ex1_poly):
    sk = CornerLocusService.corner_locus(ex1_poly)
    assert ConicService.check_balance(sk).ok
    heavy = Sketch(sk.chart, sk.vertices, (SketchEdge(0, 1, 2),), sk.rays)
    report = ConicService.check_balance(heavy)
    assert [d.vertex for d in report.defects] == [0, 1]
    assert report.defects[0].total == (2, 1)


def test_pendant_separations_one_point_central(central_poly):
    separations = ConicService.pendant_separations(CornerLocusService.corner_locus(central_poly))
    assert separations.ne_displacement == (1, -1)
    assert separations.west_gap == 2
    assert separations.south_gap == 2


def test_pendant_separations_two_point_central(two_point_poly):
    separations = ConicService.pendant_separations(CornerLocusService.corner_locus(two_point_poly))
    assert separations.ne_displacement == (3, -3)
    assert separations.west_gap == 2
    assert separations.south_gap == 2


def test_pendant_separations_heavy_rays(ex1_poly):
    separations = ConicService.pendant_separations(CornerLocusService.corner_locus(ex1_poly))
    assert separations.ne_displacement == (0, 0)
    assert separations.west_gap == 0
    assert separations.south_gap == 4


@given(forced_polys(ConicTag.ONE_POINT_CENTRAL))
def test_pendant_separations_match_shape(p):
    inv = ConicService.invariants_of(QuadraticService.matrix_of(p))
    separations = ConicService.pendant_separations(CornerLocusService.corner_locus(p))
    assert separations.west_gap == 2 * inv.s32p
    assert separations.south_gap == 2 * inv.s31p
    dx, dy = separations.ne_displacement
    assert abs(dx) + abs(dy) == 2 * inv.s21p


def test_pendant_separations_rejects_bad_census():
    sk = Sketch(
        Chart.Z,
        (SketchVertex(point2(0, 0), frozenset()),),
        rays=(SketchRay(0, (-1, 0), 2), SketchRay(0, (0, -1), 2), SketchRay(0, (1, 1), 1)),
    )
    with pytest.raises(SeparationError):
        ConicService.pendant_separations(sk)


def test_tree_center(central_poly, two_point_poly, ex1_poly):
    assert ConicService.tree_center(CornerLocusService.corner_locus(central_poly)) == [1]
    assert ConicService.tree_center(CornerLocusService.corner_locus(two_point_poly)) == [0, 2]
    assert ConicService.tree_center(CornerLocusService.corner_locus(ex1_poly)) == [0, 1]


@pytest.mark.parametrize("tag, count", [
    (ConicTag.ONE_POINT_CENTRAL, 4),
    (ConicTag.TWO_POINT_CENTRAL, 4),
    (ConicTag.DEGENERATE_1, 3),
    (ConicTag.DEGENERATE_2, 2),
    (ConicTag.PAIR_OF_LINES_ONE_ZERO, 3),
    (ConicTag.PAIR_OF_LINES_TWO_ZEROS, 2),
    (ConicTag.DOUBLE_LINE, 1),
])
def test_expected_vertex_count(tag, count):
    assert ConicService.expected_vertex_count(tag) == count


@settings(max_examples=200)
@given(any_forced_polys())
def test_non_degenerate_iff_six_unit_rays(p):
    inv = ConicService.invariants_of(QuadraticService.matrix_of(p))
    conic_class = ConicService.classify(inv)
    sk = CornerLocusService.corner_locus(p)
    unit_rays = len(sk.rays) == 6 and all(r.weight == 1 for r in sk.rays)
    assert (not ConicService.is_degenerate(conic_class)) == (unit_rays and not ConicService.is_pair_of_lines(inv))


@settings(max_examples=200)
@given(any_forced_polys())
def test_pair_of_lines_ray_count(p):
    inv = ConicService.invariants_of(QuadraticService.matrix_of(p))
    if not ConicService.is_pair_of_lines(inv):
        return
    expected = {
        ConicTag.PAIR_OF_LINES_ONE_ZERO: 6,
        ConicTag.PAIR_OF_LINES_TWO_ZEROS: 5,
        ConicTag.DOUBLE_LINE: 3,
    }
    assert len(CornerLocusService.corner_locus(p).rays) == expected[ConicService.classify(inv).tag]


@settings(max_examples=500)
@given(nonneg_shapes())
def test_shape_singular_class_matches_determinant(s):
    inv = ConicService.invariants_of(s)
    conic_class = ConicService.classify(inv)
    assert ConicService.is_shape_singular_class(conic_class) == QuadraticService.singular(s.rows())


def test_first_example_upward_ray_is_unbalanced(ex1_poly):
    # Ex. 1 is printed with a ray (0, 1) at (4, 2); only (0, -1) balances.
    sk = CornerLocusService.corner_locus(ex1_poly)
    rays = tuple(
        SketchRay(r.vertex, (0, 1), r.weight) if r.vertex == 1 and r.direction == (0, -1) else r
        for r in sk.rays
    )
    report = ConicService.check_balance(Sketch(sk.chart, sk.vertices, sk.edges, rays))
    assert [(d.vertex, d.total) for d in report.defects] == [(1, (0, 2))]
