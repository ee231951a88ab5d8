# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel for finite-field towers.

Twin of qformff._gfcore_py (same GFContext API, same packed representation,
bit-identical results); see that module for the conventions.  Values stay
below 2**63 by construction, so scalars live in C int64 except for prime
fields too large for 64-bit products, which fall back to Python integers.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

DEF MAX_DEG = 64

# largest p with (p-1)**2 < 2**63
cdef int64_t _MUL_SAFE = 3037000499


cdef class GFContext:
    cdef public int64_t p
    cdef public object base
    cdef public int deg
    cdef public object mod
    cdef public int64_t order
    cdef GFContext _base
    cdef int64_t _m[MAX_DEG + 1]
    cdef bint _wide

    def __init__(self, p, base=None, mod=None):
        self.p = p
        self.base = base
        if base is None:
            self._base = None
            self.deg = 1
            self.mod = None
            self.order = p
            self._wide = p > _MUL_SAFE
        else:
            self._base = <GFContext?> base
            modt = tuple(mod)
            if len(modt) < 2 or modt[len(modt) - 1] != 1:
                raise ValueError("modulus must be monic of degree >= 1")
            if len(modt) > MAX_DEG:
                raise ValueError("extension degree too large for the compiled kernel")
            self.deg = len(modt) - 1
            self.mod = modt
            py_order = int(self._base.order) ** int(self.deg)
            if py_order >= 2 ** 63:
                raise OverflowError("field order exceeds the 2^63 packing cap")
            self.order = py_order
            self._wide = False
            for i in range(self.deg + 1):
                self._m[i] = modt[i]

    # -- scalar operations ------------------------------------------------

    cpdef int64_t add(self, int64_t a, int64_t b):
        cdef int64_t B, res, shift, da, db
        if self._base is None:
            if self._wide:
                return ((<object> a) + (<object> b)) % self.p
            return (a + b) % self.p
        B = self._base.order
        res = 0
        shift = 1
        while a != 0 or b != 0:
            da = a % B
            a //= B
            db = b % B
            b //= B
            res += self._base.add(da, db) * shift
            shift *= B
        return res

    cpdef int64_t sub(self, int64_t a, int64_t b):
        cdef int64_t B, res, shift, da, db, d
        if self._base is None:
            if self._wide:
                return ((<object> a) - (<object> b)) % self.p
            d = a - b
            if d < 0:
                d += self.p
            return d
        B = self._base.order
        res = 0
        shift = 1
        while a != 0 or b != 0:
            da = a % B
            a //= B
            db = b % B
            b //= B
            res += self._base.sub(da, db) * shift
            shift *= B
        return res

    cpdef int64_t neg(self, int64_t a):
        if self._base is None:
            if a == 0:
                return 0
            return self.p - a
        return self.sub(0, a)

    cpdef int64_t mul(self, int64_t a, int64_t b):
        cdef int64_t da[MAX_DEG]
        cdef int64_t db[MAX_DEG]
        cdef int64_t prod[2 * MAX_DEG]
        cdef int i, j, n, top
        cdef int64_t c
        if self._base is None:
            if self._wide:
                return ((<object> a) * (<object> b)) % self.p
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        n = self.deg
        self._unpack(a, da)
        self._unpack(b, db)
        for i in range(2 * n - 1):
            prod[i] = 0
        for i in range(n):
            if da[i] != 0:
                for j in range(n):
                    if db[j] != 0:
                        prod[i + j] = self._base.add(prod[i + j], self._base.mul(da[i], db[j]))
        for top in range(2 * n - 2, n - 1, -1):
            c = prod[top]
            if c != 0:
                prod[top] = 0
                for j in range(n):
                    if self._m[j] != 0:
                        prod[top - n + j] = self._base.sub(
                            prod[top - n + j], self._base.mul(c, self._m[j])
                        )
        return self._pack(prod)

    def pow(self, int64_t a, e):
        """a**e with e >= 0; pow(0, 0) == 1."""
        if e < 0:
            raise ValueError("negative exponent")
        cdef int64_t result = 1
        cdef int64_t base = a
        e = int(e)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    cpdef int64_t inv(self, int64_t a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._base is None:
            return pow(a, -1, self.p)
        return self.pow(a, self.order - 2)

    # -- dense polynomial operations over this field ----------------------

    def poly_mul(self, f, g):
        if not f or not g:
            return []
        cdef Py_ssize_t lf = len(f), lg = len(g), i, j
        cdef int64_t * buf
        cdef int64_t * fa
        cdef int64_t * ga
        cdef int64_t p = self.p, fi
        if self._base is None and not self._wide:
            fa = <int64_t *> malloc(lf * sizeof(int64_t))
            ga = <int64_t *> malloc(lg * sizeof(int64_t))
            buf = <int64_t *> malloc((lf + lg - 1) * sizeof(int64_t))
            try:
                for i in range(lf):
                    fa[i] = f[i]
                for j in range(lg):
                    ga[j] = g[j]
                for i in range(lf + lg - 1):
                    buf[i] = 0
                for i in range(lf):
                    fi = fa[i]
                    if fi != 0:
                        for j in range(lg):
                            buf[i + j] = (buf[i + j] + fi * ga[j]) % p
                return [buf[i] for i in range(lf + lg - 1)]
            finally:
                free(fa)
                free(ga)
                free(buf)
        out = [0] * (lf + lg - 1)
        for i in range(lf):
            if f[i]:
                for j in range(lg):
                    if g[j]:
                        out[i + j] = self.add(out[i + j], self.mul(f[i], g[j]))
        return out

    def poly_divmod(self, f, g):
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        cdef Py_ssize_t m = len(f), n = len(g), i, j, rlen
        if m < n:
            return [], list(f)
        cdef int64_t inv_lc = self.inv(g[n - 1])
        cdef int64_t p = self.p, qi
        cdef int64_t * r
        cdef int64_t * ga
        q = [0] * (m - n + 1)
        if self._base is None and not self._wide:
            r = <int64_t *> malloc(m * sizeof(int64_t))
            ga = <int64_t *> malloc(n * sizeof(int64_t))
            try:
                for i in range(m):
                    r[i] = f[i]
                for j in range(n):
                    ga[j] = g[j]
                rlen = m
                for i in range(m - n, -1, -1):
                    if rlen >= i + n:
                        qi = (r[rlen - 1] * inv_lc) % p
                        q[i] = qi
                        for j in range(n):
                            r[i + j] = (r[i + j] - qi * ga[j]) % p
                            if r[i + j] < 0:
                                r[i + j] += p
                        while rlen > 0 and r[rlen - 1] == 0:
                            rlen -= 1
                return q, [r[i] for i in range(rlen)]
            finally:
                free(r)
                free(ga)
        rl = list(f)
        for i in range(m - n, -1, -1):
            if len(rl) >= i + n:
                qi_obj = self.mul(rl[len(rl) - 1], inv_lc)
                q[i] = qi_obj
                for j in range(n):
                    if g[j]:
                        rl[i + j] = self.sub(rl[i + j], self.mul(qi_obj, g[j]))
                while rl and not rl[len(rl) - 1]:
                    rl.pop()
        return q, rl

    def poly_mod(self, f, g):
        return self.poly_divmod(f, g)[1]

    # -- helpers -----------------------------------------------------------

    cdef void _unpack(self, int64_t a, int64_t * out):
        cdef int64_t B = self._base.order
        cdef int i
        for i in range(self.deg):
            out[i] = a % B
            a //= B

    cdef int64_t _pack(self, int64_t * digits):
        cdef int64_t B = self._base.order
        cdef int64_t res = 0
        cdef int i
        for i in range(self.deg - 1, -1, -1):
            res = res * B + digits[i]
        return res
