"""Local square classes, Hilbert symbols, Springer splits, local decisions."""

import random

import pytest

from qformff import (
    DegenerateFormError,
    DiagForm,
    Place,
    Poly,
    RatFunc,
    ResidueForm,
    hasse_invariant,
    hilbert_symbol,
    local_anisotropic_dimension,
    local_is_hyperbolic,
    local_is_hyperbolic_by_invariants,
    local_is_hyperbolic_by_springer,
    local_is_isotropic,
    local_length,
    local_square_class,
    residue_aniso_dim,
    springer_split,
    support,
)
from qformff.oracle import oracle_local_isotropy
from helpers import random_form, random_ratfunc, small_places


def test_square_class_examples(F3, F5):
    x = RatFunc.x(F3)
    px = Place.finite(Poly.x(F3))
    cls = local_square_class(x, px)
    assert cls.odd_valuation and cls.unit_char == 1
    cls = local_square_class(RatFunc.constant(F3, -1), px)
    assert not cls.odd_valuation and cls.unit_char == -1
    x5 = RatFunc.x(F5)
    cls = local_square_class(2 * x5, Place.finite(Poly.x(F5)))
    assert cls.odd_valuation and cls.unit_char == -1
    assert local_square_class(RatFunc.constant(F3, 1), px).is_trivial


def test_hilbert_symbol_examples(F3, F5):
    x = RatFunc.x(F3)
    px = Place.finite(Poly.x(F3))
    assert hilbert_symbol(x, x, px) == -1
    x5 = RatFunc.x(F5)
    assert hilbert_symbol(x5, x5, Place.finite(Poly.x(F5))) == 1
    u, w = RatFunc.constant(F3, 2), x + 1
    assert hilbert_symbol(u, RatFunc.constant(F3, 2), px) == 1  # both units
    assert hilbert_symbol(x, x + 1, Place.infinite(F3)) == -1


def test_hilbert_symbol_properties(F3, F5):
    rng = random.Random(20)
    for F in (F3, F5):
        places = small_places(F, 2)
        one = RatFunc.constant(F, 1)
        for _ in range(250):
            a = random_ratfunc(rng, F, 2)
            b = random_ratfunc(rng, F, 2)
            c = random_ratfunc(rng, F, 2)
            p = rng.choice(places)
            assert hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p)
            assert hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p)
            assert hilbert_symbol(a, -a, p) == 1
            if a != one:
                assert hilbert_symbol(a, one - a, p) == 1


def test_hilbert_reciprocity(F3, F5, F9):
    rng = random.Random(21)
    for F in (F3, F5, F9):
        pinf = Place.infinite(F)
        for _ in range(150):
            a = random_ratfunc(rng, F, 3)
            b = random_ratfunc(rng, F, 3)
            places = {p for p, _ in support(a)} | {p for p, _ in support(b)} | {pinf}
            prod = 1
            for p in places:
                prod *= hilbert_symbol(a, b, p)
            assert prod == 1


def test_symbol_against_oracle(F3, F5):
    rng = random.Random(22)
    for F in (F3, F5):
        places = small_places(F, 2)
        for _ in range(150):
            a = random_ratfunc(rng, F, 2)
            b = random_ratfunc(rng, F, 2)
            p = rng.choice(places)
            form = DiagForm(F, [F.one, -a, -b])
            assert (hilbert_symbol(a, b, p) == 1) == oracle_local_isotropy(form, p)


def test_hasse_invariant_examples(F3):
    px = Place.finite(Poly.x(F3))
    assert hasse_invariant(DiagForm(F3, [1, 1]), px) == 1
    x = RatFunc.x(F3)
    assert hasse_invariant(DiagForm(F3, [x, x]), px) == -1
    assert hasse_invariant(DiagForm(F3, [x, x + 1]), Place.infinite(F3)) == -1
    assert hasse_invariant(DiagForm(F3, [x]), px) == 1  # empty product


def test_springer_split_examples(F3, F5):
    x5 = RatFunc.x(F5)
    q0, q1 = springer_split(DiagForm(F5, [1, -x5, 2 * x5 * x5]), Place.finite(Poly.x(F5)))
    assert [c.val for c in q0.coeffs] == [1, 2]
    assert [c.val for c in q1.coeffs] == [4]
    px = Place.finite(Poly.x(F3))
    q0, q1 = springer_split(DiagForm(F3, [1, 1]), px)
    assert q0.dim == 2 and q1.dim == 0
    x = RatFunc.x(F3)
    q0, q1 = springer_split(DiagForm(F3, [x, x**3]), px)
    assert q0.dim == 0 and [c.val for c in q1.coeffs] == [1, 1]


def test_residue_aniso_dim_examples(F3, F9):
    one = F3.one
    assert residue_aniso_dim(ResidueForm(F3, (one, one))) == 2
    assert residue_aniso_dim(ResidueForm(F3, (one, -one))) == 0
    assert residue_aniso_dim(ResidueForm(F3, (one, one, one))) == 1
    assert residue_aniso_dim(ResidueForm(F9, (F9.one, F9.one))) == 0
    assert residue_aniso_dim(ResidueForm(F3, ())) == 0


def test_local_isotropy_examples(F3, F5):
    x = RatFunc.x(F3)
    px = Place.finite(Poly.x(F3))
    assert not local_is_isotropic(DiagForm(F3, [1, 1, -x]), px)
    x5 = RatFunc.x(F5)
    assert local_is_isotropic(DiagForm(F5, [1, 1, -x5]), Place.finite(Poly.x(F5)))
    rng = random.Random(23)
    for _ in range(20):
        form = random_form(rng, F3, 5, 2)
        p = rng.choice(small_places(F3, 2))
        assert local_is_isotropic(form, p)  # dim >= 5 is always isotropic


def test_local_hyperbolicity_examples(F3, F5):
    x = RatFunc.x(F3)
    for p in small_places(F3, 1):
        assert local_is_hyperbolic(DiagForm(F3, [x, -x]), p)
    assert local_is_hyperbolic(DiagForm(F5, [1, 1]), Place.finite(Poly.x(F5)))
    assert not local_is_hyperbolic(DiagForm(F3, [1, 1]), Place.infinite(F3))


def test_local_hyperbolicity_routes_agree(F3, F5, F9):
    rng = random.Random(24)
    for F in (F3, F5, F9):
        places = small_places(F, 2)
        for _ in range(170):
            form = random_form(rng, F, rng.randint(2, 6), 2)
            p = rng.choice(places)
            assert local_is_hyperbolic_by_springer(form, p) == local_is_hyperbolic_by_invariants(form, p)


def test_local_aniso_dim_examples(F3):
    x = RatFunc.x(F3)
    px = Place.finite(Poly.x(F3))
    assert local_anisotropic_dimension(DiagForm(F3, [1, 1, -x, -x]), px) == 4
    for p in small_places(F3, 1):
        assert local_anisotropic_dimension(DiagForm(F3, [1, -1]), p) == 0
    assert local_anisotropic_dimension(DiagForm(F3, [1, 1, x]), px) == 3


def test_local_aniso_dim_invariants(F3, F5):
    rng = random.Random(25)
    for F in (F3, F5):
        places = small_places(F, 2)
        for _ in range(120):
            form = random_form(rng, F, rng.randint(1, 6), 2)
            p = rng.choice(places)
            d = local_anisotropic_dimension(form, p)
            assert 0 <= d <= 4
            assert d % 2 == form.dim % 2
            assert (d == 0) == local_is_hyperbolic(form, p)
            assert (d < form.dim) == local_is_isotropic(form, p)


def test_local_length_cases(F3, F5):
    x = RatFunc.x(F3)
    px = Place.finite(Poly.x(F3))
    assert local_length(x, px) == 3
    x5 = RatFunc.x(F5)
    assert local_length(x5, Place.finite(Poly.x(F5))) == 2
    assert local_length(RatFunc.constant(F3, -1), px) == 2
    p2 = Place.finite(Poly(F3, [1, 0, 1]))
    assert local_length(RatFunc(Poly(F3, [1, 0, 1])), p2) == 2  # odd val, |k| = 9


def test_local_length_properties(F3, F5):
    rng = random.Random(26)
    for F in (F3, F5):
        places = small_places(F, 2)
        for _ in range(100):
            a = random_ratfunc(rng, F, 2)
            p = rng.choice(places)
            ll = local_length(a, p)
            assert ll in (1, 2, 3)
            assert (ll == 1) == local_square_class(a, p).is_trivial
            s = random_ratfunc(rng, F, 2)
            assert local_length(a * s * s, p) == ll


def test_degenerate_form_rejected(F3):
    with pytest.raises(DegenerateFormError):
        DiagForm(F3, [1, 0, 1])
    with pytest.raises(DegenerateFormError):
        DiagForm(F3, [])
