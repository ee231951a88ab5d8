"""Shared polynomial routines on raw packed coefficient lists.

These operate below the :class:`~qformff.polyring.Poly` wrapper so that field
construction (which must validate a defining modulus before any Poly exists)
and the factorization machinery can share one implementation.  Coefficients
are packed integers for some kernel context; conventions match the kernel
(lowest degree first, no trailing zeros, ``[]`` is zero).
"""

from __future__ import annotations


def trim(f):
    while f and not f[-1]:
        f.pop()
    return f


def monic(ctx, f):
    if not f:
        return []
    lc = f[-1]
    if lc == 1:
        return list(f)
    inv = ctx.inv(lc)
    return [ctx.mul(c, inv) for c in f]


def gcd(ctx, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, ctx.poly_mod(f, g)
    return monic(ctx, f)


def powmod(ctx, f, e, m):
    """f**e reduced modulo m, by square-and-multiply."""
    result = [1]
    f = ctx.poly_mod(list(f), m)
    while e:
        if e & 1:
            result = ctx.poly_mod(ctx.poly_mul(result, f), m)
        e >>= 1
        if e:
            f = ctx.poly_mod(ctx.poly_mul(f, f), m)
    return result


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(ctx, f):
    """Rabin's irreducibility test over the field of ``ctx``.

    Requires deg f >= 1.  Uses x^(Q^m) mod f computed by m-fold Frobenius,
    Q the field order.
    """
    n = len(f) - 1
    if n < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if n == 1:
        return True
    f = monic(ctx, f)
    Q = ctx.order
    x = [0, 1]
    checkpoints = {n // r for r in _prime_divisors(n)}
    t = x
    for m in range(1, n + 1):
        t = powmod(ctx, t, Q, f)
        if m in checkpoints:
            # gcd(x^(Q^m) - x, f) must be 1 for every maximal proper m
            if len(gcd(ctx, _sub(ctx, t, x), f)) != 1:
                return False
    return t == x


def _sub(ctx, f, g):
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = ctx.sub(a, b)
    return trim(out)
