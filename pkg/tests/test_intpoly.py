from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantorlist.intpoly import (
    DomainError,
    Poly,
    content,
    derivative,
    eval_at,
    exact_divide,
    format_poly,
    primitive_part,
    reflect,
    sign_at,
)

coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=7)
polys = coeff_lists.map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero)
rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)


def test_trailing_zeros_trimmed():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero and Poly([0]).degree == -1


def test_from_high_and_high():
    p = Poly.from_high([1, 0, -1, 1])
    assert p.coeffs == (1, -1, 0, 1)
    assert p.high() == (1, 0, -1, 1)


@pytest.mark.parametrize("high, text", [
    ([1, 0, -1, 1], "x^3-x+1"),
    ([2, -1], "2x-1"),
    ([1, 0], "x"),
    ([1, 1, -1], "x^2+x-1"),
    ([-3, 0, 0], "-3x^2"),
    ([5], "5"),
])
def test_format(high, text):
    assert format_poly(Poly.from_high(high)) == text


def test_format_zero():
    assert str(Poly(())) == "0"


def test_content_and_primitive():
    p = Poly.from_high([-4, 6, 2])
    assert content(p) == 2
    assert primitive_part(p).high() == (2, -3, -1)
    with pytest.raises(DomainError):
        content(Poly(()))


def test_canonical():
    assert Poly.from_high([2, -1]).is_canonical()
    assert not Poly.from_high([2, -2]).is_canonical()
    assert not Poly.from_high([-1, 1]).is_canonical()


def test_eval_and_sign():
    p = Poly.from_high([2, -1])
    assert eval_at(p, Fraction(1, 2)) == 0
    assert sign_at(p, Fraction(1, 2)) == 0
    assert sign_at(p, 1) == 1 and sign_at(p, 0) == -1


def test_derivative():
    assert derivative(Poly.from_high([1, 0, -1, 1])).high() == (3, 0, -1)
    assert derivative(Poly([7])).is_zero


def test_exact_divide():
    p = Poly.from_high([1, 0, -1])
    assert exact_divide(p, Poly.from_high([1, -1])).high() == (1, 1)
    assert exact_divide(p, Poly.from_high([2, 1])) is None
    assert exact_divide(Poly.from_high([1, 0, 1]), Poly.from_high([1, 1])) is None
    with pytest.raises(DomainError):
        exact_divide(p, Poly(()))


def test_reflect_example():
    assert reflect(Poly.from_high([1, 1, 0, 1])).high() == (1, -1, 0, -1)
    assert reflect(Poly.from_high([1, 0, -2])).high() == (1, 0, -2)


@given(nonzero_polys, rationals)
def test_sign_at_matches_eval(p, q):
    v = eval_at(p, q)
    assert sign_at(p, q) == (v > 0) - (v < 0)


@given(polys, nonzero_polys)
def test_product_divides_back(a, b):
    assert exact_divide(a * b, b) == a


@given(polys, polys, rationals)
def test_ring_homomorphism(a, b, q):
    assert eval_at(a * b, q) == eval_at(a, q) * eval_at(b, q)
    assert eval_at(a + b, q) == eval_at(a, q) + eval_at(b, q)


@given(nonzero_polys)
def test_reflect_is_involution_up_to_sign(p):
    pp = primitive_part(p)
    assert reflect(reflect(pp)) == pp


@given(nonzero_polys, rationals)
def test_reflect_negates_roots(p, q):
    assert (eval_at(reflect(p), -q) == 0) == (eval_at(p, q) == 0)
