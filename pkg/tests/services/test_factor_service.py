import pytest
from hypothesis import given, settings, strategies as st

from tropconics.core.exceptions import DegreeError, InvariantViolation
from tropconics.models.geometry import ConicTag
from tropconics.models.quadratic import LinForm, Monomial
from tropconics.models.semiring import BOTTOM, TropScalar
from tropconics.services.factor_service import FactorService
from tropconics.services.quadratic_service import QuadraticService
from tropconics.utils.expression import format_factorization, parse_poly
from tests.strategies import any_forced_polys, finite_scalars, forced_polys, quad_polys


def lin_forms():
    return st.builds(LinForm, finite_scalars(), finite_scalars(), finite_scalars())


def test_second_example(ex2_poly):
    f, g = FactorService.factorize(ex2_poly)
    assert f == LinForm(1, 6, 0)
    assert g == LinForm(-1, 6, 0)
    assert format_factorization(f, g) == "(1*X + 6*Y + Z) * ((-1)*X + 6*Y + Z)"
    assert FactorService.expand(f, g) == ex2_poly


def test_negated_middle_coefficient_does_not_expand_back(ex2_poly):
    product = FactorService.expand(LinForm(1, -6, 0), LinForm(-1, 6, 0))
    assert product.coefficient(Monomial.YY) == TropScalar(0)
    assert product != ex2_poly


def test_irreducible(central_poly, ex1_poly):
    assert FactorService.factorize(central_poly) is None
    assert not FactorService.is_reducible(ex1_poly)


def test_reducible_conic_need_not_factor():
    p = parse_poly("X^2 + Y^2 + Z^2 + (-1)*X*Y + Y*Z + X*Z")
    assert not FactorService.is_reducible(p)
    assert FactorService.factorize(p) is None
    assert FactorService.conic_is_reducible(p)


def test_bottom_coefficient_is_irreducible():
    assert not FactorService.is_reducible(parse_poly("X^2 + Y^2 + Z^2 + X*Y + X*Z"))


def test_tie_for_largest_entry():
    # s21 = s32 = 1, s31 = 0: the tie picks the (2, 1) pair.
    p = parse_poly("X^2 + Y^2 + Z^2 + 1*X*Y + 1*Y*Z + X*Z")
    f, g = FactorService.factorize(p)
    assert f == LinForm(1, 0, 1)
    assert FactorService.expand(f, g) == p


def test_expand_needs_finite_squares():
    with pytest.raises(DegreeError):
        FactorService.expand(LinForm(0, BOTTOM, 0), LinForm(0, 0, 0))


@given(lin_forms(), lin_forms())
def test_products_factor(f, g):
    p = FactorService.expand(f, g)
    assert FactorService.is_reducible(p)
    factors = FactorService.factorize(p)
    assert factors is not None
    assert FactorService.expand(*factors) == p


@settings(max_examples=300)
@given(st.one_of(quad_polys(), any_forced_polys()))
def test_factorize_agrees_with_criterion(p):
    factors = FactorService.factorize(p)
    assert (factors is not None) == FactorService.is_reducible(p)
    if factors is not None:
        assert FactorService.expand(*factors) == p
        assert FactorService.conic_is_reducible(p)


@given(forced_polys(ConicTag.ONE_POINT_CENTRAL))
def test_central_conics_are_irreducible(p):
    assert FactorService.factorize(p) is None
    assert not FactorService.conic_is_reducible(p)


def test_broken_expansion_is_an_invariant_violation(monkeypatch, ex2_poly):
    monkeypatch.setattr(FactorService, "expand", staticmethod(lambda f, g: parse_poly("X^2 + Y^2 + Z^2")))
    with pytest.raises(InvariantViolation):
        FactorService.factorize(ex2_poly)


def test_expand_examples():
    square = FactorService.expand(LinForm(0, 0, 0), LinForm(0, 0, 0))
    assert square.coefficients == (TropScalar(0),) * 6
    shape = FactorService.expand(LinForm(1, 0, 0), LinForm(-1, 0, 0))
    assert shape.coefficients == tuple(TropScalar(v) for v in (0, 0, 0, 1, 0, 1))


def test_expand_of_normal_form():
    # (aX + bY + Z)(-aX - bY + Z) has shape entries |a - b|, |b|, |a|.
    p = FactorService.expand(LinForm(3, -2, 0), LinForm(-3, 2, 0))
    assert [p.coefficient(m) for m in (Monomial.XY, Monomial.YZ, Monomial.XZ)] == [
        TropScalar(5), TropScalar(2), TropScalar(3),
    ]


def test_square_of_linear_form():
    p = parse_poly("2*X^2 + 4*Y^2 + 6*Z^2 + 3*X*Y + 5*Y*Z + 4*X*Z")
    assert FactorService.factorize(p) == (LinForm(1, 2, 3), LinForm(1, 2, 3))


def _normalized(f: LinForm) -> LinForm:
    shift = f.x.inverse()
    return LinForm(*(c * shift for c in f.coefficients))


@given(lin_forms(), lin_forms(), st.sampled_from([(2, 1, 3), (3, 1, 2), (2, 3, 1), (1, 3, 2)]))
def test_factorize_commutes_with_permutation(f, g, perm):
    p = FactorService.expand(f, g)
    moved = FactorService.factorize(QuadraticService.permute(p, perm))
    original = FactorService.factorize(p)
    assert {_normalized(h) for h in moved} == {_normalized(h.permuted(perm)) for h in original}
