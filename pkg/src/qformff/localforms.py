"""Quadratic form computations in the completions of F_q(x).

Every place here has odd residue characteristic, so a form splits into a
unit part and a uniformizer part whose residue forms over the (finite)
residue field decide everything: isotropy, hyperbolicity, anisotropic
dimension.  The same residue data yields Hilbert symbols through the tame
formula and local sums-of-squares lengths through the square-class case
analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from qformff.errors import DegenerateFormError, ZeroInputError
from qformff.ffield import ConstField, FFElem, quad_char
from qformff.funcfield import Place, RatFunc, residue_field, unit_residue, valuation
from qformff.polyring import Poly


class DiagForm:
    """A non-degenerate diagonal quadratic form <a_1, ..., a_n> over F_q(x)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ConstField, coeffs):
        vals = []
        for c in coeffs:
            if isinstance(c, RatFunc):
                pass
            elif isinstance(c, Poly):
                c = RatFunc(c)
            else:
                c = RatFunc.constant(field, field.element(c))
            if c.field != field:
                raise DegenerateFormError("coefficient over a different field")
            if not c:
                raise DegenerateFormError("diagonal forms must have nonzero coefficients")
            vals.append(c)
        if not vals:
            raise DegenerateFormError("a form needs at least one coefficient")
        self.field = field
        self.coeffs = tuple(vals)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def det(self) -> RatFunc:
        out = RatFunc.constant(self.field, 1)
        for c in self.coeffs:
            out = out * c
        return out

    def signed_disc(self) -> RatFunc:
        """(-1)**(n(n-1)/2) times the determinant; a square-class invariant."""
        d = self.det()
        if (self.dim * (self.dim - 1) // 2) % 2:
            d = -d
        return d

    def scaled(self, c: RatFunc) -> "DiagForm":
        return DiagForm(self.field, tuple(c * a for a in self.coeffs))

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, DiagForm)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return ", ".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"DiagForm<{self}>"


@dataclass(frozen=True)
class SquareClass:
    """One of the four square classes of a local field: determined by the
    parity of the valuation and the character of the unit residue."""

    odd_valuation: bool
    unit_char: int  # +1 or -1

    @property
    def is_trivial(self) -> bool:
        """True iff the class is that of the squares."""
        return not self.odd_valuation and self.unit_char == 1


@dataclass(frozen=True)
class ResidueForm:
    """A diagonal form over a residue field; may be empty (dimension 0)."""

    field: object  # ConstField | ResidueField
    coeffs: tuple  # of nonzero FFElem

    @property
    def dim(self) -> int:
        return len(self.coeffs)


@lru_cache(maxsize=65536)
def _local_data(a: RatFunc, place: Place):
    return valuation(a, place), unit_residue(a, place)


def local_square_class(a: RatFunc, place: Place) -> SquareClass:
    """Square class of a in the completion at the place."""
    if not a:
        raise ZeroInputError("zero has no square class")
    v, u = _local_data(a, place)
    return SquareClass(odd_valuation=bool(v % 2), unit_char=quad_char(u))


def hilbert_symbol(a: RatFunc, b: RatFunc, place: Place) -> int:
    """The Hilbert symbol (a, b) at the place: +1 iff z^2 = a x^2 + b y^2
    has a nontrivial local solution.

    Computed by the tame formula chi((-1)^(ab valuations)) * chi(unit
    residues cross-powered), valid here because every residue field has
    odd order.  Symmetric and bimultiplicative.
    """
    if not a or not b:
        raise ZeroInputError("Hilbert symbol needs nonzero entries")
    alpha, ua = _local_data(a, place)
    beta, ub = _local_data(b, place)
    kappa = residue_field(place)
    sign = 1
    if (alpha * beta) % 2:
        sign *= quad_char(-kappa.one)
    if beta % 2:
        sign *= quad_char(ua)
    if alpha % 2:
        sign *= quad_char(ub)
    return sign


def hasse_invariant(q: DiagForm, place: Place) -> int:
    """Product of Hilbert symbols (a_i, a_j) over i < j; +1 for dim 1."""
    out = 1
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            out *= hilbert_symbol(q.coeffs[i], q.coeffs[j], place)
    return out


def springer_split(q: DiagForm, place: Place):
    """Split q into residue forms (q0, q1): even-valuation coefficients land
    in q0 as their unit residues, odd-valuation ones in q1, order kept."""
    kappa = residue_field(place)
    even, odd = [], []
    for a in q.coeffs:
        v, u = _local_data(a, place)
        (odd if v % 2 else even).append(u)
    return (
        ResidueForm(kappa, tuple(even)),
        ResidueForm(kappa, tuple(odd)),
    )


def residue_aniso_dim(r: ResidueForm) -> int:
    """Anisotropic dimension of a diagonal form over a finite field: 0, 1 or 2.

    Odd dimension gives 1; even positive dimension gives 0 when the signed
    discriminant is a square, else 2; dimension >= 3 is always isotropic.
    """
    n = r.dim
    if n == 0:
        return 0
    if n % 2:
        return 1
    kappa = r.field
    d = kappa.one
    for c in r.coeffs:
        d = d * c
    if (n * (n - 1) // 2) % 2:
        d = -d
    return 0 if quad_char(d) == 1 else 2


def local_is_isotropic(q: DiagForm, place: Place) -> bool:
    """Isotropy over the completion: some Springer part is isotropic over
    the residue field."""
    q0, q1 = springer_split(q, place)
    return residue_aniso_dim(q0) < q0.dim or residue_aniso_dim(q1) < q1.dim


def local_anisotropic_dimension(q: DiagForm, place: Place) -> int:
    """Dimension of the anisotropic kernel of q over the completion.

    The sum of the two residue-form anisotropic dimensions; at most 4 and
    congruent to dim q mod 2.
    """
    q0, q1 = springer_split(q, place)
    return residue_aniso_dim(q0) + residue_aniso_dim(q1)


def local_is_hyperbolic_by_springer(q: DiagForm, place: Place) -> bool:
    """Hyperbolicity via the residue decomposition: both parts fully split."""
    if q.dim % 2:
        return False
    q0, q1 = springer_split(q, place)
    return residue_aniso_dim(q0) == 0 and residue_aniso_dim(q1) == 0


def local_is_hyperbolic_by_invariants(q: DiagForm, place: Place) -> bool:
    """Hyperbolicity via the classical invariants: even dimension, square
    discriminant, and Hasse invariant equal to (-1,-1)^(m(m-1)/2)."""
    if q.dim % 2:
        return False
    if not local_square_class(q.signed_disc(), place).is_trivial:
        return False
    m = q.dim // 2
    minus_one = RatFunc.constant(q.field, -1)
    reference = hilbert_symbol(minus_one, minus_one, place) ** (m * (m - 1) // 2)
    return hasse_invariant(q, place) == reference


def local_is_hyperbolic(q: DiagForm, place: Place) -> bool:
    """Hyperbolicity over the completion (Springer route; the invariant
    route is exposed separately and must agree)."""
    return local_is_hyperbolic_by_springer(q, place)


def local_length(a: RatFunc, place: Place) -> int:
    """Least n with a a sum of n squares in the completion: 1, 2 or 3.

    Even valuation: 1 for local squares, else 2.  Odd valuation: 2 when -1
    is a square in the residue field (order = 1 mod 4), else 3.
    """
    if not a:
        raise ZeroInputError("zero has no local length")
    cls = local_square_class(a, place)
    if not cls.odd_valuation:
        return 1 if cls.unit_char == 1 else 2
    kappa = residue_field(place)
    return 2 if kappa.order % 4 == 1 else 3
