"""The rational function field K = F_q(x): elements, places, local data.

Places of K are the monic irreducible polynomials of F_q[x] (finite places)
plus one infinite place, the pole of x.  The infinite place is a first-class
value here and is deliberately included in every "relevant places" set built
downstream: unit coefficients are invisible to the finite support but can
still carry square-class or Hasse obstructions at infinity.

Canonical uniformizers are fixed once and for all: the place polynomial at a
finite place, 1/x at infinity.  This makes unit residues (and hence all
square-class data) deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from qformff.errors import FieldMismatchError, ReducibleModulusError, ZeroInputError
from qformff.ffield import ConstField, FFElem, ResidueField
from qformff.polyring import Poly, factor, is_irreducible, poly_gcd, poly_is_square


class RatFunc:
    """Element of F_q(x) as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        field = num.field
        if den is None:
            den = Poly.constant(field, 1)
        if den.field != field:
            raise FieldMismatchError("numerator and denominator over different fields")
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = num
            self.den = Poly.constant(field, 1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lc = den.leading_coefficient()
        if lc.val != 1:
            inv = lc.inverse()
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, field: ConstField, c) -> "RatFunc":
        return cls(Poly.constant(field, c))

    @classmethod
    def x(cls, field: ConstField) -> "RatFunc":
        return cls(Poly.x(field))

    @property
    def field(self) -> ConstField:
        return self.num.field

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatchError("elements of different function fields")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, FFElem)):
            return RatFunc.constant(self.field, self.field.element(other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __pow__(self, e: int):
        if e < 0:
            return (RatFunc.constant(self.field, 1) / self) ** (-e)
        return RatFunc(self.num**e, self.den**e)

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        from qformff.parsing import render_ratfunc

        return render_ratfunc(self)

    def __repr__(self):
        return f"RatFunc({self})"


class Place:
    """A place of F_q(x): a monic irreducible polynomial, or infinity."""

    __slots__ = ("field", "poly")

    def __init__(self, field: ConstField, poly: Poly | None):
        if poly is not None:
            if poly.field != field:
                raise FieldMismatchError("place polynomial over a different field")
            if poly.degree < 1:
                raise ValueError("a finite place needs a polynomial of degree >= 1")
            if poly.leading_coefficient().val != 1:
                poly = poly.monic()
            if not is_irreducible(poly):
                raise ReducibleModulusError(f"{poly} is not irreducible, so not a place")
        self.field = field
        self.poly = poly

    @classmethod
    def finite(cls, poly: Poly) -> "Place":
        return cls(poly.field, poly)

    @classmethod
    def infinite(cls, field: ConstField) -> "Place":
        return cls(field, None)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        # finite places by (degree, lex); infinity sorts last
        if self.poly is None:
            return (1, ())
        return (0, self.poly.sort_key())

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and self.field == other.field
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.field, self.poly))

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)

    def __repr__(self):
        return f"Place({self})"


@lru_cache(maxsize=4096)
def residue_field(place: Place):
    """The residue field at a place: F_q[x]/(P), which is F_q when deg P = 1."""
    if place.degree == 1:
        return place.field
    return ResidueField(place.field, place.poly.coeffs)


def _strip_factor(f: Poly, P: Poly):
    """(multiplicity of P in f, f / P**multiplicity)."""
    count = 0
    while True:
        q, r = divmod(f, P)
        if r:
            return count, f
        f = q
        count += 1


def valuation(f: RatFunc, place: Place) -> int:
    """Order of vanishing of f at the place; poles are negative.

    Additive: v(fg) = v(f) + v(g).  Raises on f = 0 (its valuation would
    be +infinity).
    """
    if not f:
        raise ZeroInputError("the zero element has no finite valuation")
    if place.is_infinite:
        return f.den.degree - f.num.degree
    a, _ = _strip_factor(f.num, place.poly)
    if a:
        return a
    b, _ = _strip_factor(f.den, place.poly)
    return -b


def unit_residue(f: RatFunc, place: Place) -> FFElem:
    """Residue of f * pi**(-v(f)) in the residue field, pi the canonical
    uniformizer (the place polynomial, or 1/x at infinity).  Always nonzero."""
    if not f:
        raise ZeroInputError("the zero element has no unit residue")
    kappa = residue_field(place)
    if place.is_infinite:
        lc = f.num.leading_coefficient() / f.den.leading_coefficient()
        return kappa.element(lc)
    P = place.poly
    _, n0 = _strip_factor(f.num, P)
    _, d0 = _strip_factor(f.den, P)
    ctx = f.field.ctx
    rn = ctx.poly_mod(list(n0.coeffs), list(P.coeffs))
    rd = ctx.poly_mod(list(d0.coeffs), list(P.coeffs))
    if place.degree == 1:
        return FFElem(kappa, ctx.mul(rn[0] if rn else 0, ctx.inv(rd[0] if rd else 0)))
    num_elem = kappa.from_digits(rn)
    den_elem = kappa.from_digits(rd)
    return num_elem / den_elem


def support(f: RatFunc, rng_seed: int | None = None):
    """All places with nonzero valuation, as (place, valuation) pairs.

    Finite places come from factoring numerator and denominator; the
    infinite place is appended when deg num != deg den.  Canonical order:
    finite by (degree, lex), infinity last.
    """
    if not f:
        raise ZeroInputError("the zero element has no support")
    field = f.field
    entries = []
    if f.num.degree > 0:
        for g, e in factor(f.num, rng_seed=rng_seed):
            entries.append((Place.finite(g), e))
    if f.den.degree > 0:
        for g, e in factor(f.den, rng_seed=rng_seed):
            entries.append((Place.finite(g), -e))
    entries.sort(key=lambda t: t[0].sort_key())
    v_inf = f.den.degree - f.num.degree
    if v_inf:
        entries.append((Place.infinite(field), v_inf))
    return entries


def is_global_square(f: RatFunc) -> bool:
    """True iff f is the square of a rational function (0 counts)."""
    if not f:
        return True
    return poly_is_square(f.num) and poly_is_square(f.den)
