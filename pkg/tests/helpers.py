"""Shared random generators for the test suite (seeded, reproducible)."""

from __future__ import annotations

import random

from qformff import ConstField, DiagForm, FFElem, Place, Poly, RatFunc


def random_element(rng: random.Random, field: ConstField, nonzero: bool = False) -> FFElem:
    lo = 1 if nonzero else 0
    return FFElem(field, rng.randrange(lo, field.q))


def random_poly(rng: random.Random, field: ConstField, max_deg: int, nonzero: bool = True) -> Poly:
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = [rng.randrange(field.q) for _ in range(deg + 1)]
        p = Poly(field, [FFElem(field, c) for c in coeffs])
        if p or not nonzero:
            return p


def random_ratfunc(rng: random.Random, field: ConstField, max_deg: int, nonzero: bool = True) -> RatFunc:
    num = random_poly(rng, field, max_deg, nonzero=nonzero)
    den = random_poly(rng, field, max_deg, nonzero=True)
    return RatFunc(num, den)


def random_form(rng: random.Random, field: ConstField, dim: int, max_deg: int) -> DiagForm:
    return DiagForm(field, [random_ratfunc(rng, field, max_deg) for _ in range(dim)])


def small_places(field: ConstField, max_degree: int = 2) -> list[Place]:
    """All places of degree <= max_degree, plus infinity."""
    from qformff import is_irreducible

    out = []
    for deg in range(1, max_degree + 1):
        for packed in range(field.q**deg):
            coeffs = []
            v = packed
            for _ in range(deg):
                v, d = divmod(v, field.q)
                coeffs.append(d)
            coeffs.append(1)
            poly = Poly(field, [FFElem(field, c) for c in coeffs])
            if is_irreducible(poly):
                out.append(Place.finite(poly))
    out.append(Place.infinite(field))
    return out
