"""Pure-Python arithmetic kernel for finite-field towers.

This module is the fallback twin of the compiled kernel ``qformff._gfcore``;
both expose the same ``GFContext`` API and must produce identical values.
Selection happens in :mod:`qformff._kernel`.

An element of a field of order ``B**d`` built on a base field of order ``B``
is packed as the integer ``sum(digit_i * B**i)`` where each digit is itself a
packed element of the base field.  Prime fields pack an element as its own
residue.  All packed values stay below 2**63 (enforced by the callers), so
the compiled kernel can work on native 64-bit words.

Polynomials over a context are plain Python lists of packed coefficients,
lowest degree first, with no trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations


class GFContext:
    """Arithmetic for one level of a finite-field tower.

    ``GFContext(p)`` is the prime field F_p.  ``GFContext(p, base, mod)``
    is ``base[y]/(mod)`` where ``mod`` is a monic sequence of packed base
    elements, lowest degree first, ``mod[-1] == 1``.
    """

    __slots__ = ("p", "base", "deg", "mod", "order")

    def __init__(self, p, base=None, mod=None):
        self.p = p
        self.base = base
        if base is None:
            self.deg = 1
            self.mod = None
            self.order = p
        else:
            mod = tuple(mod)
            if len(mod) < 2 or mod[-1] != 1:
                raise ValueError("modulus must be monic of degree >= 1")
            self.deg = len(mod) - 1
            self.mod = mod
            self.order = base.order ** self.deg

    # -- scalar operations ------------------------------------------------

    def add(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        base = self.base
        B = base.order
        res = 0
        shift = 1
        while a or b:
            a, da = divmod(a, B)
            b, db = divmod(b, B)
            res += base.add(da, db) * shift
            shift *= B
        return res

    def sub(self, a, b):
        if self.base is None:
            return (a - b) % self.p
        base = self.base
        B = base.order
        res = 0
        shift = 1
        while a or b:
            a, da = divmod(a, B)
            b, db = divmod(b, B)
            res += base.sub(da, db) * shift
            shift *= B
        return res

    def neg(self, a):
        if self.base is None:
            return -a % self.p
        return self.sub(0, a)

    def mul(self, a, b):
        if self.base is None:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        base = self.base
        n = self.deg
        da = self._digits(a)
        db = self._digits(b)
        prod = [0] * (len(da) + len(db) - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    if bj:
                        prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        # reduce modulo the monic defining polynomial
        mod = self.mod
        for i in range(len(prod) - 1, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                off = i - n
                for j in range(n):
                    mj = mod[j]
                    if mj:
                        prod[off + j] = base.sub(prod[off + j], base.mul(c, mj))
        return self._pack(prod[:n])

    def pow(self, a, e):
        """a**e with e >= 0; pow(0, 0) == 1."""
        if e < 0:
            raise ValueError("negative exponent")
        if self.base is None:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.base is None:
            return pow(a, -1, self.p)
        return self.pow(a, self.order - 2)

    # -- dense polynomial operations over this field ----------------------

    def poly_mul(self, f, g):
        if not f or not g:
            return []
        if self.base is None:
            p = self.p
            out = [0] * (len(f) + len(g) - 1)
            for i, fi in enumerate(f):
                if fi:
                    for j, gj in enumerate(g):
                        out[i + j] += fi * gj
            return [c % p for c in out]
        out = [0] * (len(f) + len(g) - 1)
        for i, fi in enumerate(f):
            if fi:
                for j, gj in enumerate(g):
                    if gj:
                        out[i + j] = self.add(out[i + j], self.mul(fi, gj))
        return out

    def poly_divmod(self, f, g):
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        m, n = len(f), len(g)
        if m < n:
            return [], list(f)
        inv_lc = self.inv(g[-1])
        q = [0] * (m - n + 1)
        r = list(f)
        if self.base is None:
            p = self.p
            for i in range(m - n, -1, -1):
                if len(r) >= i + n:
                    q_i = r[-1] * inv_lc % p
                    q[i] = q_i
                    for j in range(n):
                        r[i + j] = (r[i + j] - q_i * g[j]) % p
                    while r and not r[-1]:
                        r.pop()
        else:
            for i in range(m - n, -1, -1):
                if len(r) >= i + n:
                    q_i = self.mul(r[-1], inv_lc)
                    q[i] = q_i
                    for j in range(n):
                        if g[j]:
                            r[i + j] = self.sub(r[i + j], self.mul(q_i, g[j]))
                    while r and not r[-1]:
                        r.pop()
        return q, r

    def poly_mod(self, f, g):
        return self.poly_divmod(f, g)[1]

    # -- helpers -----------------------------------------------------------

    def _digits(self, a):
        B = self.base.order
        out = [0] * self.deg
        i = 0
        while a:
            a, out[i] = divmod(a, B)
            i += 1
        return out

    def _pack(self, digits):
        B = self.base.order
        res = 0
        for d in reversed(digits):
            res = res * B + d
        return res
