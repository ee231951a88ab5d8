"""Input grammar and canonical rendering."""

import pytest

from qformff import (
    DegenerateFormError,
    EvenCharacteristicError,
    ParseError,
    Place,
    Poly,
    RatFunc,
    ReducibleModulusError,
    parse_field,
    parse_form,
    parse_place,
    parse_poly,
    parse_ratfunc,
)
from qformff.parsing import render_form, render_poly, render_ratfunc


def test_parse_field():
    F3 = parse_field("GF(3)")
    assert F3.p == 3 and F3.k == 1
    F9 = parse_field("GF(9, t^2+1)")
    assert F9.q == 9 and F9.modulus == (1, 0, 1)
    assert parse_field("GF(3^2, t^2+1)") == F9
    F27 = parse_field("GF(27, t^3+2t+1)")
    assert F27.q == 27
    assert parse_field("GF(25, t^2+2)").q == 25


def test_parse_field_errors():
    with pytest.raises(EvenCharacteristicError):
        parse_field("GF(2)")
    with pytest.raises(ParseError):
        parse_field("GF(6)")  # not a prime power
    with pytest.raises(ParseError):
        parse_field("GF(9)")  # missing modulus
    with pytest.raises(ParseError):
        parse_field("GF(3, t+1)")  # prime field with modulus
    with pytest.raises(ReducibleModulusError):
        parse_field("GF(9, t^2+2)")
    with pytest.raises(ParseError):
        parse_field("RF(3)")


def test_parse_poly_basics(F3):
    x = Poly.x(F3)
    assert parse_poly("x^2+2*x+1", F3) == x**2 + 2 * x + 1
    assert parse_poly("2x", F3) == 2 * x  # implicit *
    assert parse_poly("-x", F3) == 2 * x
    assert parse_poly("x - 1", F3) == x + 2
    assert parse_poly("0", F3) == Poly(F3)
    assert parse_poly("x^0", F3) == Poly.constant(F3, 1)
    assert parse_poly("7", F3) == Poly.constant(F3, 1)  # reduced mod p
    assert parse_poly("x + x", F3) == 2 * x


def test_parse_poly_extension_coefficients(F9):
    f = parse_poly("(t+1)*x^2 + t", F9)
    assert f.degree == 2
    assert f.coeffs[2] == F9.from_digits([1, 1]).val
    assert f.coeffs[0] == F9.from_digits([0, 1]).val
    g = parse_poly("t^1*x", F9)
    assert g.coeffs[1] == F9.from_digits([0, 1]).val


def test_parse_poly_errors(F3, F9):
    with pytest.raises(ParseError):
        parse_poly("x +", F3)
    with pytest.raises(ParseError):
        parse_poly("y", F3)
    with pytest.raises(ParseError):
        parse_poly("t*x", F3)  # no t in a prime field
    with pytest.raises(ParseError):
        parse_poly("(t^5)*x", F9)  # t-degree exceeds the field degree
    with pytest.raises(ParseError):
        parse_poly("x^999999999", F3)


def test_parse_ratfunc(F3):
    x = Poly.x(F3)
    f = parse_ratfunc("x^2+1/x", F3)  # single slash splits once
    assert f == RatFunc(x**2 + 1, x)
    assert parse_ratfunc("x/x", F3) == RatFunc.constant(F3, 1)
    with pytest.raises(ParseError):
        parse_ratfunc("x/x/x", F3)
    with pytest.raises(ParseError):
        parse_ratfunc("1/0", F3)


def test_parse_form(F3, F9):
    q = parse_form("1, 1, -x", F3)
    assert [str(c) for c in q.coeffs] == ["1", "1", "2*x"]
    with pytest.raises(DegenerateFormError):
        parse_form("1, 0, x", F3)
    q = parse_form("(t+1)*x^2 + t, 1", F9)
    assert q.dim == 2
    with pytest.raises(ParseError):
        parse_form("1,,x", F3)


def test_parse_place(F3, F5):
    assert parse_place("inf", F3).is_infinite
    p = parse_place("x^2+1", F3)
    assert p.degree == 2
    with pytest.raises(ReducibleModulusError):
        parse_place("x^2+4", F5)
    with pytest.raises(ParseError):
        parse_place("2", F3)


def test_render_round_trip(F3, F9):
    cases_f3 = ["x^2+2*x+1", "2*x", "0", "x^3+x", "x^2+1/x", "2*x+1/x^2+x"]
    for src in cases_f3:
        v = parse_ratfunc(src, F3)
        assert parse_ratfunc(render_ratfunc(v), F3) == v
        assert render_ratfunc(parse_ratfunc(render_ratfunc(v), F3)) == render_ratfunc(v)
    cases_f9 = ["(t+1)*x^2+t", "(2*t+2)*x+(t)", "x^2+(t+1)"]
    for src in cases_f9:
        v = parse_ratfunc(src, F9)
        assert parse_ratfunc(render_ratfunc(v), F9) == v


def test_render_form(F3):
    q = parse_form("1, -x, x/x+1", F3)
    rendered = render_form(q)
    assert parse_form(rendered, F3) == q


def test_whitespace_ignored(F3):
    assert parse_poly(" x ^ 2 + 2 * x ", F3) == parse_poly("x^2+2x", F3)
