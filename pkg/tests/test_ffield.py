"""Constant fields, residue extensions, squares and characters."""

import random

import pytest

from qformff import (
    ConstField,
    EvenCharacteristicError,
    FFElem,
    FieldMismatchError,
    FieldTooLargeError,
    NotPrimeError,
    ReducibleModulusError,
    ResidueField,
    ZeroInputError,
    enumerate_field,
    is_square,
    quad_char,
)
from helpers import random_element


def test_basic_arithmetic(F3, F5, F9):
    assert (F3.element(2) * F3.element(2)).val == 1
    t = F9.from_digits([0, 1])
    assert (t * t) == F9.element(2)
    assert (F5.element(3) / F5.element(2)).val == 4
    assert (F3.element(1) - F3.element(2)).val == 2
    a = F9.from_digits([1, 2])
    assert (a - a).val == 0
    assert (-F5.element(2)).val == 3


def test_pow(F3, F5, F9):
    assert (F5.element(2) ** 4).val == 1
    assert (F3.element(2) ** 0).val == 1
    t = F9.from_digits([0, 1])
    assert (t**8).val == 1
    assert (F5.element(0) ** 0).val == 1  # empty product convention
    assert (F5.element(2) ** -1) == F5.element(3)


def test_division_errors(F3):
    with pytest.raises(ZeroDivisionError):
        F3.element(1) / F3.element(0)
    F5 = ConstField(5)
    with pytest.raises(FieldMismatchError):
        F3.element(1) + F5.element(1)


def test_is_square_examples(F3, F5, F9):
    assert not is_square(F5.element(2))
    assert not is_square(-F3.one)
    assert is_square(-F9.one)  # t^2 = -1
    assert is_square(F3.element(0))  # 0 = 0^2, by convention


def test_quad_char_examples(F3, F5, F9):
    assert quad_char(-F3.one) == -1
    assert quad_char(-F5.one) == 1
    for F in (F3, F5, F9):
        assert quad_char(F.one) == 1
    with pytest.raises(ZeroInputError):
        quad_char(F3.element(0))


def _fields_through_121():
    return [
        ConstField(3),
        ConstField(5),
        ConstField(7),
        ConstField(3, 2, [1, 0, 1]),
        ConstField(11),
        ConstField(13),
        ConstField(5, 2, [2, 0, 1]),
        ConstField(3, 3, [1, 2, 0, 1]),
    ]


def test_euler_criterion_matches_exhaustive_squares():
    for F in _fields_through_121():
        true_squares = {(e * e).val for e in enumerate_field(F)}
        for e in enumerate_field(F):
            assert is_square(e) == (e.val in true_squares)
            if e:
                assert quad_char(e) == (1 if e.val in true_squares else -1)


def test_quad_char_multiplicative():
    rng = random.Random(0)
    for F in _fields_through_121():
        for _ in range(1000):
            a = random_element(rng, F, nonzero=True)
            b = random_element(rng, F, nonzero=True)
            assert quad_char(a * b) == quad_char(a) * quad_char(b)


def test_minus_one_square_iff_q_mod_four():
    for F in _fields_through_121():
        assert is_square(-F.one) == (F.q % 4 == 1)


def test_frobenius_additivity():
    rng = random.Random(1)
    for F in _fields_through_121():
        for _ in range(100):
            a = random_element(rng, F)
            b = random_element(rng, F)
            assert (a + b) ** F.p == a**F.p + b**F.p


def test_enumeration(F3, F9):
    assert [e.val for e in enumerate_field(F3)] == [0, 1, 2]
    elems = list(enumerate_field(F9))
    assert len(elems) == 9 == len(set(elems))
    assert elems[0].val == 0
    F5 = ConstField(5)
    squares = {(e * e).val for e in enumerate_field(F5)}
    assert squares == {0, 1, 4}
    with pytest.raises(FieldTooLargeError):
        next(enumerate_field(ConstField(1_000_003)))


def test_construction_validation():
    with pytest.raises(NotPrimeError):
        ConstField(9)
    with pytest.raises(EvenCharacteristicError):
        ConstField(2)
    with pytest.raises(ReducibleModulusError):
        ConstField(3, 2, [2, 0, 1])  # t^2 + 2 = (t+1)(t+2) over F3
    with pytest.raises(ValueError):
        ConstField(3, 2)  # missing modulus
    with pytest.raises(ValueError):
        ConstField(3, 2, [1, 0, 0, 1])  # degree mismatch
    with pytest.raises(FieldTooLargeError):
        ConstField(2**31 - 1, 3, [1, 1, 0, 1])  # order would exceed 2^63


def test_non_monic_modulus_is_normalized():
    F9a = ConstField(3, 2, [1, 0, 1])
    F9b = ConstField(3, 2, [2, 0, 2])  # 2*(t^2+1)
    assert F9a == F9b


def test_residue_field_extension(F3):
    kappa = ResidueField(F3, (1, 0, 1))  # F3[y]/(y^2+1), order 9
    assert kappa.order == 9
    y = kappa.from_digits([0, 1])
    assert (y * y) == kappa.element(-1)
    assert is_square(-kappa.one)
    embedded = kappa.element(F3.element(2))
    assert embedded.val == 2
    with pytest.raises(ReducibleModulusError):
        ResidueField(F3, (2, 0, 1))
    assert kappa.order % 4 in (1, 3)


def test_rep_is_canonical(F9):
    a = F9.from_digits([2, 1])
    assert a.rep == (2, 1)
    assert F9.element(2).rep == (2,)
    assert F9.zero.rep == ()
    assert hash(F9.from_digits([2, 1])) == hash(a)
