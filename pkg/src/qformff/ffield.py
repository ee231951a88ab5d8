"""Exact arithmetic in odd-order finite fields and their extensions.

A constant field F_q (q = p^k, p an odd prime) is described by its
characteristic and, for k > 1, a monic irreducible modulus over F_p in the
indeterminate t.  Residue fields of places of F_q(x) are extensions of F_q
by a second modulus, so towers never grow higher than two levels over F_p.

Elements are immutable wrappers around packed integers (see
:mod:`qformff._gfcore_py` for the packing), which makes equality, hashing
and enumeration canonical.  Every field order is capped below 2**63 so the
compiled kernel can use native words.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from qformff._kernel import GFContext
from qformff import _polyarith
from qformff.errors import (
    EvenCharacteristicError,
    FieldMismatchError,
    FieldTooLargeError,
    NotPrimeError,
    ReducibleModulusError,
    ZeroInputError,
)

ENUMERATION_CAP = 10**6
ORDER_CAP = 2**63

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, valid far beyond 2**63 with these witnesses
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _tpoly_str(digits, var: str = "t") -> str:
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        c = digits[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


class ConstField:
    """The constant field F_q, q = p^k odd.

    For k > 1 an explicit monic irreducible modulus over F_p (coefficient
    sequence, lowest degree first) is required and verified.
    """

    __slots__ = ("p", "k", "q", "modulus", "ctx")

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not _is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        if p == 2:
            raise EvenCharacteristicError("characteristic 2 is not supported")
        if k < 1:
            raise ValueError("extension degree must be positive")
        q = p**k
        if q >= ORDER_CAP:
            raise FieldTooLargeError(f"field order {q} exceeds the 2^63 packing cap")
        self.p = p
        self.k = k
        self.q = q
        if k == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
            self.ctx = GFContext(p)
        else:
            if modulus is None:
                raise ValueError(f"GF({p}^{k}) needs an irreducible modulus over GF({p})")
            digits = [int(c) % p for c in modulus]
            while digits and not digits[-1]:
                digits.pop()
            if len(digits) - 1 != k:
                raise ValueError(f"modulus degree {len(digits) - 1} does not match k = {k}")
            if digits[-1] != 1:
                inv = pow(digits[-1], -1, p)
                digits = [c * inv % p for c in digits]
            prime_ctx = GFContext(p)
            if not _polyarith.is_irreducible(prime_ctx, digits):
                raise ReducibleModulusError(f"{_tpoly_str(digits)} is reducible over GF({p})")
            self.modulus = tuple(digits)
            self.ctx = GFContext(p, prime_ctx, digits)

    @property
    def order(self) -> int:
        return self.q

    @property
    def char(self) -> int:
        return self.p

    def element(self, value) -> "FFElem":
        """Coerce an integer (as a prime-subfield constant) or FFElem."""
        if isinstance(value, FFElem):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field!r} given to {self!r}")
            return value
        return FFElem(self, int(value) % self.p)

    def from_digits(self, digits) -> "FFElem":
        """Element from its coefficient sequence over F_p, lowest degree first."""
        if len(digits) > self.k:
            raise ValueError(f"at most {self.k} digits expected")
        val = 0
        for d in reversed([int(c) % self.p for c in digits]):
            val = val * self.p + d
        return FFElem(self, val)

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, 0)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, 1)

    def __eq__(self, other):
        return (
            isinstance(other, ConstField)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((ConstField, self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.q}, {_tpoly_str(self.modulus)})"


class ResidueField:
    """An extension F_q[y]/(P) of a constant field by a monic irreducible P.

    Used as the residue field of a finite place of degree >= 2; degree-1
    residue fields are the constant field itself.  Digits of packed elements
    are packed elements of the base field.
    """

    __slots__ = ("base", "modulus", "degree", "order", "ctx")

    def __init__(self, base: ConstField, modulus):
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) < 3:
            raise ValueError("ResidueField is for extensions of degree >= 2")
        if modulus[-1] != 1:
            raise ValueError("place modulus must be monic")
        deg = len(modulus) - 1
        order = base.q**deg
        if order >= ORDER_CAP:
            raise FieldTooLargeError(f"residue field order {order} exceeds the 2^63 cap")
        if not _polyarith.is_irreducible(base.ctx, list(modulus)):
            raise ReducibleModulusError("place modulus is reducible")
        self.base = base
        self.modulus = modulus
        self.degree = deg
        self.order = order
        self.ctx = GFContext(base.p, base.ctx, modulus)

    @property
    def char(self) -> int:
        return self.base.p

    def element(self, value) -> "FFElem":
        if isinstance(value, FFElem):
            if value.field == self:
                return value
            if value.field == self.base:
                return FFElem(self, value.val)  # constant digit embedding
            raise FieldMismatchError(f"cannot coerce element of {value.field!r}")
        return FFElem(self, int(value) % self.base.p)

    def from_digits(self, digits) -> "FFElem":
        """Element from its coefficients over F_q (packed ints or FFElems)."""
        if len(digits) > self.degree:
            raise ValueError(f"at most {self.degree} digits expected")
        vals = []
        for d in digits:
            if isinstance(d, FFElem):
                if d.field != self.base:
                    raise FieldMismatchError("digit from the wrong base field")
                vals.append(d.val)
            else:
                vals.append(int(d) % self.base.q)
        val = 0
        for d in reversed(vals):
            val = val * self.base.q + d
        return FFElem(self, val)

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, 0)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, 1)

    def __eq__(self, other):
        return (
            isinstance(other, ResidueField)
            and self.base == other.base
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((ResidueField, self.base, self.modulus))

    def __repr__(self):
        return f"ResidueField({self.base!r}, degree {self.degree})"


Field = ConstField | ResidueField


class FFElem:
    """Immutable element of a ConstField or ResidueField (packed value)."""

    __slots__ = ("field", "val")

    def __init__(self, field: Field, val: int):
        self.field = field
        self.val = val

    @property
    def rep(self) -> tuple:
        """Digit sequence over the subfield, lowest degree first, trimmed."""
        B = self.field.p if isinstance(self.field, ConstField) else self.field.base.q
        v, out = self.val, []
        while v:
            v, d = divmod(v, B)
            out.append(d)
        return tuple(out)

    def _coerce(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise FieldMismatchError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.ctx.add(self.val, other.val))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.ctx.sub(self.val, other.val))

    def __rsub__(self, other):
        return self.field.element(other).__sub__(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.ctx.mul(self.val, other.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.ctx.mul(self.val, self.field.ctx.inv(other.val)))

    def __rtruediv__(self, other):
        return self.field.element(other).__truediv__(self)

    def __pow__(self, e: int):
        if e < 0:
            return FFElem(self.field, self.field.ctx.pow(self.field.ctx.inv(self.val), -e))
        return FFElem(self.field, self.field.ctx.pow(self.val, e))

    def __neg__(self):
        return FFElem(self.field, self.field.ctx.neg(self.val))

    def inverse(self) -> "FFElem":
        return FFElem(self.field, self.field.ctx.inv(self.val))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        return isinstance(other, FFElem) and self.field == other.field and self.val == other.val

    def __hash__(self):
        return hash((self.field, self.val))

    def __repr__(self):
        if isinstance(self.field, ConstField) and self.field.k > 1:
            return _tpoly_str(self.rep)
        if isinstance(self.field, ResidueField):
            return f"FFElem{self.rep or (0,)}"
        return str(self.val)


def is_square(a: FFElem) -> bool:
    """Euler's criterion; zero counts as a square (0 = 0**2)."""
    if a.val == 0:
        return True
    F = a.field
    return F.ctx.pow(a.val, (F.order - 1) // 2) == 1


@lru_cache(maxsize=65536)
def _quad_char_val(field: Field, val: int) -> int:
    return 1 if field.ctx.pow(val, (field.order - 1) // 2) == 1 else -1


def quad_char(a: FFElem) -> int:
    """The quadratic character: +1 on nonzero squares, -1 on nonsquares."""
    if a.val == 0:
        raise ZeroInputError("quadratic character of zero")
    return _quad_char_val(a.field, a.val)


def enumerate_field(F: Field) -> Iterator[FFElem]:
    """Yield every element exactly once, zero first, in packed order."""
    if F.order > ENUMERATION_CAP:
        raise FieldTooLargeError(f"|F| = {F.order} exceeds the enumeration cap {ENUMERATION_CAP}")
    for v in range(F.order):
        yield FFElem(F, v)
