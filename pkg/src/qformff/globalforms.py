"""Global decision procedures for quadratic forms over K = F_q(x).

Everything reduces to completions: a form of dimension >= 3 is isotropic
iff it is isotropic at every place, hyperbolic iff its discriminant is a
global square and it is hyperbolic at every place, and its anisotropic
dimension is the maximum of the local ones.  Only finitely many places can
obstruct: the finite places dividing some coefficient, plus the infinite
place, which is always inspected (unit coefficients can hide a nonsquare
constant that only the infinite place sees).

The field invariants at the end depend only on q mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from qformff.errors import InvariantError, ZeroInputError
from qformff.ffield import ConstField
from qformff.funcfield import Place, RatFunc, is_global_square, support
from qformff.localforms import (
    DiagForm,
    local_anisotropic_dimension,
    local_is_hyperbolic,
    local_is_isotropic,
    local_length,
)

MAX_ANISO_DIM = 4  # over a nonreal global field no anisotropic form exceeds this


@dataclass(frozen=True)
class WittData:
    """Witt-decomposition summary of a form."""

    dim: int
    aniso_dim: int
    witt_index: int
    hyperbolic: bool
    isotropic: bool

    def __post_init__(self):
        if not 0 <= self.aniso_dim <= MAX_ANISO_DIM:
            raise InvariantError(f"anisotropic dimension {self.aniso_dim} out of range")
        if (self.dim - self.aniso_dim) % 2 or self.witt_index != (self.dim - self.aniso_dim) // 2:
            raise InvariantError("Witt index does not match dim and anisotropic dimension")
        if self.hyperbolic != (self.aniso_dim == 0):
            raise InvariantError("hyperbolic flag inconsistent")
        if self.isotropic != (self.aniso_dim < self.dim):
            raise InvariantError("isotropic flag inconsistent")


def relevant_places(q: DiagForm, rng_seed: int | None = None):
    """Finite places dividing some coefficient, plus infinity, deduplicated,
    in canonical order with infinity last."""
    finite = {}
    for a in q.coeffs:
        for place, _ in support(a, rng_seed=rng_seed):
            if not place.is_infinite:
                finite[place] = None
    places = sorted(finite, key=Place.sort_key)
    places.append(Place.infinite(q.field))
    return places


def is_isotropic(q: DiagForm, rng_seed: int | None = None) -> bool:
    """Does q have a nontrivial zero over F_q(x)?

    Dimension 1: never.  Dimension 2: iff the signed discriminant is a
    square.  Dimension >= 3: iff q is isotropic at every relevant place
    (at all other places it is a unit form of dimension >= 3, hence
    isotropic).
    """
    if q.dim == 1:
        return False
    if q.dim == 2:
        return is_global_square(q.signed_disc())
    return all(local_is_isotropic(q, p) for p in relevant_places(q, rng_seed))


def is_hyperbolic(q: DiagForm, rng_seed: int | None = None) -> bool:
    """Is q an orthogonal sum of hyperbolic planes?"""
    if q.dim % 2:
        return False
    if not is_global_square(q.signed_disc()):
        return False
    return all(local_is_hyperbolic(q, p) for p in relevant_places(q, rng_seed))


def anisotropic_dimension(q: DiagForm, rng_seed: int | None = None) -> int:
    """Dimension of the anisotropic kernel: the maximum of the local ones
    over the relevant places (never an empty set; infinity is always there)."""
    best = 0
    for p in relevant_places(q, rng_seed):
        best = max(best, local_anisotropic_dimension(q, p))
        if best == MAX_ANISO_DIM:
            break
    return best


def witt_index(q: DiagForm, rng_seed: int | None = None) -> int:
    """Number of hyperbolic planes split off by q."""
    return (q.dim - anisotropic_dimension(q, rng_seed)) // 2


def witt_data(q: DiagForm, rng_seed: int | None = None) -> WittData:
    """Full Witt-decomposition summary, with its invariants checked."""
    aniso = anisotropic_dimension(q, rng_seed)
    return WittData(
        dim=q.dim,
        aniso_dim=aniso,
        witt_index=(q.dim - aniso) // 2,
        hyperbolic=aniso == 0,
        isotropic=aniso < q.dim,
    )


def length(a: RatFunc, rng_seed: int | None = None) -> int:
    """Least n such that a is a sum of n squares in F_q(x): 1, 2 or 3.

    Squares have length 1.  Otherwise the result is the maximum of 2 and
    the local lengths at the places where a has odd valuation (even
    valuation places never force more than 2), with an early exit at 3.
    """
    if not a:
        raise ZeroInputError("zero has no length")
    if is_global_square(a):
        return 1
    best = 2
    for place, v in support(a, rng_seed=rng_seed):
        if v % 2 == 0:
            continue
        local = local_length(a, place)
        if local == 3:
            return 3
        best = max(best, local)
    return best


def level(F: ConstField) -> int:
    """The level of F_q(x): least n with -1 a sum of n squares (1 or 2)."""
    return 1 if F.q % 4 == 1 else 2


def pythagoras_number(F: ConstField) -> int:
    """The Pythagoras number of F_q(x): 2 when q = 1 mod 4, else 3."""
    return 2 if F.q % 4 == 1 else 3
