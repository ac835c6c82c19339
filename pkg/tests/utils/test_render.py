from fractions import Fraction

from tropconics.models.geometry import point2
from tropconics.services.corner_locus_service import CornerLocusService
from tropconics.utils.render import bounding_box, clip_ray, render_ascii, render_svg, segments


def test_bounding_box(ex1_poly, double_line_poly):
    assert bounding_box(CornerLocusService.corner_locus(ex1_poly)) == (-2, -2, 6, 4)
    assert bounding_box(CornerLocusService.corner_locus(double_line_poly)) == (-2, -2, 2, 2)


def test_clip_ray():
    box = (Fraction(-2), Fraction(-2), Fraction(6), Fraction(4))
    assert clip_ray(point2(4, 2), (1, 1), box) == point2(6, 4)
    assert clip_ray(point2(0, 0), (-1, 0), box) == point2(-2, 0)
    assert clip_ray(point2(4, 2), (0, -1), box) == point2(4, -2)


def test_segments(ex1_poly):
    sk = CornerLocusService.corner_locus(ex1_poly)
    drawn = segments(sk, bounding_box(sk))
    assert len(drawn) == 5
    assert sorted(weight for *_, weight in drawn) == [1, 1, 1, 2, 2]


def test_svg_is_deterministic(ex1_poly):
    sk = CornerLocusService.corner_locus(ex1_poly)
    first = render_svg(sk)
    assert first == render_svg(sk)
    assert first.lstrip().startswith("<?xml") or first.lstrip().startswith("<svg")
    assert first.count('stroke-width="4.5"') == 2
    assert first.count('stroke-width="1.5"') == 3


def test_svg_labels(ex1_poly):
    sk = CornerLocusService.corner_locus(ex1_poly)
    svg = render_svg(sk, {point2(0, 0): "v3=w3"})
    assert "v3=w3" in svg


def test_ascii(ex1_poly):
    sk = CornerLocusService.corner_locus(ex1_poly)
    text = render_ascii(sk, width=41, height=21)
    assert text == render_ascii(sk, width=41, height=21)
    lines = text.splitlines()
    assert sum(line.count("o") for line in lines[:21]) == 2
    assert "#" in text
    assert "o n0 (0, 0)" in lines
    assert "o n1 (4, 2)" in lines
