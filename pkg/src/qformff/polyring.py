"""Dense univariate polynomials over a constant field F_q.

``Poly`` stores a tuple of packed coefficients, lowest degree first, with no
trailing zeros; the zero polynomial has an empty tuple and ``degree == -1``
(kept distinct from constants, which have degree 0).  Operators are
overloaded; division is euclidean via :func:`divmod`.

Factorization is squarefree decomposition (with the characteristic-p p-th
root step), then distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting using the odd-order exponent (Q**d - 1)/2.  The
randomness is a seeded Las Vegas ingredient: it can only affect running
time, never the (canonically sorted) result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from qformff import _polyarith
from qformff.errors import FieldMismatchError, InvariantError, ZeroInputError
from qformff.ffield import ConstField, FFElem


class Poly:
    """Polynomial over a ConstField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ConstField, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, FFElem):
                if c.field != field:
                    raise FieldMismatchError("coefficient from a different field")
                vals.append(c.val)
            else:
                vals.append(field.element(int(c)).val)
        while vals and not vals[-1]:
            vals.pop()
        self.field = field
        self.coeffs = tuple(vals)

    @classmethod
    def _raw(cls, field: ConstField, packed) -> "Poly":
        # fast path: packed coefficients already reduced and trimmed
        self = object.__new__(cls)
        self.field = field
        self.coeffs = tuple(packed)
        return self

    @classmethod
    def x(cls, field: ConstField) -> "Poly":
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field: ConstField, c) -> "Poly":
        v = field.element(c).val
        return cls._raw(field, (v,) if v else ())

    @property
    def degree(self) -> int:
        """len(coeffs) - 1; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> FFElem:
        v = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FFElem(self.field, v)

    def leading_coefficient(self) -> FFElem:
        return FFElem(self.field, self.coeffs[-1] if self.coeffs else 0)

    def monic(self) -> "Poly":
        return Poly._raw(self.field, _polyarith.monic(self.field.ctx, list(self.coeffs)))

    def _check(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            return other
        if isinstance(other, (int, FFElem)):
            return Poly.constant(self.field, self.field.element(other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.field.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly._raw(self.field, _polyarith.trim(out))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.field.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else 0
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            out[i] = ctx.sub(a, b)
        return Poly._raw(self.field, _polyarith.trim(out))

    def __rsub__(self, other):
        return self._check(other).__sub__(self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._raw(self.field, self.field.ctx.poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __neg__(self):
        ctx = self.field.ctx
        return Poly._raw(self.field, tuple(ctx.neg(c) for c in self.coeffs))

    def __divmod__(self, other):
        other = self._check(other)
        q, r = self.field.ctx.poly_divmod(list(self.coeffs), list(other.coeffs))
        return Poly._raw(self.field, q), Poly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> "Poly":
        ctx = self.field.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(ctx.mul(self.coeffs[i], i % self.field.p))
        return Poly._raw(self.field, _polyarith.trim(out))

    def evaluate(self, a: FFElem) -> FFElem:
        """Horner evaluation at an element of the coefficient field."""
        if a.field != self.field:
            raise FieldMismatchError("evaluation point from a different field")
        ctx = self.field.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, a.val), c)
        return FFElem(self.field, acc)

    def sort_key(self):
        """Canonical (degree, leading-coefficient-first lexicographic) key."""
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        from qformff.parsing import render_poly

        return render_poly(self)

    def __repr__(self):
        return f"Poly({self})"


@dataclass(frozen=True)
class Factorization:
    """unit * product of p_i**e_i with monic irreducible, sorted p_i."""

    unit: FFElem
    factors: tuple  # of (Poly, int)

    def __iter__(self):
        return iter(self.factors)

    def expand(self) -> Poly:
        field = self.unit.field
        out = Poly.constant(field, self.unit)
        for g, e in self.factors:
            out = out * g**e
        return out


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if not f and not g:
        raise ZeroInputError("gcd(0, 0) is undefined")
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    return Poly._raw(f.field, _polyarith.gcd(f.field.ctx, list(f.coeffs), list(g.coeffs)))


def _pth_root(f: Poly) -> Poly:
    """Preimage of f under the Frobenius x -> x**p; requires f'(x) = 0."""
    field = f.field
    ctx = field.ctx
    p, q = field.p, field.q
    root = []
    for j in range(0, len(f.coeffs), p):
        root.append(ctx.pow(f.coeffs[j], q // p))
    return Poly._raw(field, _polyarith.trim(root))


def squarefree_decomposition(f: Poly):
    """Pairs (g, m), monic squarefree pairwise-coprime g, with f = lc * prod g**m.

    Multiplicities come out strictly increasing.  Handles vanishing
    derivatives (p-th powers) by extracting p-th roots and rescaling.
    """
    if not f:
        raise ZeroInputError("cannot decompose the zero polynomial")
    field = f.field
    one = Poly.constant(field, 1)
    factors = []
    n = 1
    f = f.monic()
    while f.degree >= 1:
        d = f.derivative()
        if d:
            g = poly_gcd(f, d)
            h = f // g
            i = 1
            while h != one:
                step = poly_gcd(g, h)
                part = h // step
                if part.degree > 0:
                    factors.append((part, i * n))
                g, h, i = g // step, step, i + 1
            if g == one:
                break
            f = g
        # here f is a p-th power: every exponent in f is divisible by p
        f = _pth_root(f)
        n *= field.p
    return sorted(factors, key=lambda t: t[1])


def _ddf(f: Poly):
    """Distinct-degree split of a monic squarefree f: pairs (product, degree)."""
    field = f.field
    ctx = field.ctx
    Q = field.q
    out = []
    rest = list(f.coeffs)
    x = [0, 1]
    h = list(x)
    i = 1
    while len(rest) - 1 >= 2 * i:
        h = _polyarith.powmod(ctx, h, Q, rest)
        g = _polyarith.gcd(ctx, _polyarith._sub(ctx, h, x), rest)
        if len(g) > 1:
            out.append((Poly._raw(field, g), i))
            rest, r = ctx.poly_divmod(rest, g)
            if r:
                raise InvariantError("distinct-degree split: gcd does not divide")
            h = ctx.poly_mod(h, rest)
        i += 1
    if len(rest) > 1:
        out.append((Poly._raw(field, rest), len(rest) - 1))
    return out


def _edf(f: Poly, d: int, rng: random.Random):
    """Cantor-Zassenhaus split of a monic product of degree-d irreducibles."""
    field = f.field
    ctx = field.ctx
    n = f.degree
    if n == d:
        return [f]
    exponent = (field.q**d - 1) // 2
    coeffs = list(f.coeffs)
    while True:
        u = [rng.randrange(field.q) for _ in range(n)]
        u = _polyarith.trim(u)
        if len(u) < 2:
            continue
        g = _polyarith.gcd(ctx, list(u), coeffs)
        if 1 < len(g) < len(coeffs):
            break
        h = _polyarith.powmod(ctx, u, exponent, coeffs)
        g = _polyarith.gcd(ctx, _polyarith._sub(ctx, h, [1]), coeffs)
        if 1 < len(g) < len(coeffs):
            break
    left = Poly._raw(field, g)
    right = f // left
    return _edf(left, d, rng) + _edf(right, d, rng)


def factor(f: Poly, rng_seed: int | None = None) -> Factorization:
    """Complete factorization into monic irreducibles.

    Deterministic output for any seed (factors are sorted canonically);
    the seed only fixes the Las Vegas splitting sequence.
    """
    if not f:
        raise ZeroInputError("cannot factor the zero polynomial")
    rng = random.Random(0 if rng_seed is None else rng_seed)
    unit = f.leading_coefficient()
    irreducibles = []
    for g, mult in squarefree_decomposition(f):
        for h, d in _ddf(g):
            for piece in _edf(h, d, rng):
                irreducibles.append((piece, mult))
    irreducibles.sort(key=lambda t: t[0].sort_key())
    result = Factorization(unit, tuple(irreducibles))
    if result.expand() != f:
        raise InvariantError("factorization does not reproduce its input")
    return result


def is_irreducible(f: Poly) -> bool:
    """Rabin's test; requires degree >= 1."""
    if f.degree < 1:
        raise ValueError("irreducibility is about degree >= 1")
    return _polyarith.is_irreducible(f.field.ctx, list(f.coeffs))


def poly_is_square(f: Poly) -> bool:
    """True iff f is the square of a polynomial (zero counts: 0 = 0**2)."""
    from qformff.ffield import is_square

    if not f:
        return True
    if not is_square(f.leading_coefficient()):
        return False
    return all(mult % 2 == 0 for _, mult in squarefree_decomposition(f))
