"""Text syntax for fields, polynomials, rational functions and forms.

Field descriptions look like ``GF(5)``, ``GF(9, t^2+1)`` or ``GF(3^2, t^2+1)``.
Polynomials in x use integer coefficients (reduced mod p) or, over extension
fields, parenthesized polynomials in t: ``(t+1)*x^2 + t``.  A rational
function is ``poly / poly`` with a single slash; a diagonal form is a
comma-separated list of rational functions.  Whitespace is ignored.

Rendering is the canonical inverse: descending terms, explicit ``*`` and
``^``, coefficients as canonical residues, so parse(render(v)) == v.
"""

from __future__ import annotations

import re

from qformff.errors import DegenerateFormError, ParseError
from qformff.ffield import ConstField, FFElem, _is_prime
from qformff.funcfield import Place, RatFunc
from qformff.polyring import Poly

_MAX_EXPONENT = 10_000

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|([+\-*/^(),]))")


def _tokenize(src: str):
    tokens = []
    src = src.rstrip()
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos:pos + 1]!r} at position {pos}")
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append((m.group(3), None))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Stream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}")
        return tok


def _int_root(q: int, k: int) -> int:
    lo, hi = 1, 1 << (q.bit_length() // k + 2)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= q:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _prime_power(q: int):
    for k in range(q.bit_length(), 0, -1):
        p = _int_root(q, k)
        if p**k == q and _is_prime(p):
            return p, k
    return None


def parse_field(spec: str) -> ConstField:
    """Parse ``GF(p)``, ``GF(p^k, modulus)`` or ``GF(q, modulus)``."""
    toks = _Stream(_tokenize(spec))
    name = toks.expect("name")
    if name[1] != "GF":
        raise ParseError(f"field descriptions start with GF, not {name[1]!r}")
    toks.expect("(")
    base = toks.expect("int")[1]
    if toks.peek()[0] == "^":
        toks.next()
        k = toks.expect("int")[1]
        if k < 1:
            raise ParseError("extension degree must be positive")
        p = base
    else:
        pk = _prime_power(base)
        if pk is None:
            raise ParseError(f"{base} is not a prime power")
        p, k = pk
    modulus = None
    if toks.peek()[0] == ",":
        toks.next()
        modulus = _parse_tpoly_coeffs(toks, p)
    toks.expect(")")
    toks.expect("end")
    if k > 1 and modulus is None:
        raise ParseError(f"GF({p}^{k}) needs a modulus in t")
    if k == 1 and modulus is not None:
        raise ParseError("prime fields take no modulus")
    return ConstField(p, k, modulus)


def _parse_tpoly_coeffs(toks: _Stream, p: int):
    """A polynomial in t over F_p, as a coefficient list (lowest first)."""
    coeffs: dict[int, int] = {}
    sign = 1
    if toks.peek()[0] in ("+", "-"):
        sign = -1 if toks.next()[0] == "-" else 1
    while True:
        c, e = _parse_tterm(toks)
        coeffs[e] = (coeffs.get(e, 0) + sign * c) % p
        kind = toks.peek()[0]
        if kind in ("+", "-"):
            sign = -1 if toks.next()[0] == "-" else 1
            continue
        break
    top = max(coeffs, default=0)
    return [coeffs.get(i, 0) for i in range(top + 1)]


def _parse_tterm(toks: _Stream):
    """One term of a t-polynomial: returns (coefficient, exponent)."""
    kind, value = toks.peek()
    coef = 1
    has_coef = False
    if kind == "int":
        toks.next()
        coef = value
        has_coef = True
        if toks.peek()[0] == "*":
            toks.next()
            kind, value = toks.peek()
            if not (kind == "name" and value == "t"):
                raise ParseError("expected t after '*'")
    kind, value = toks.peek()
    if kind == "name" and value == "t":
        toks.next()
        exp = 1
        if toks.peek()[0] == "^":
            toks.next()
            exp = toks.expect("int")[1]
            if exp > _MAX_EXPONENT:
                raise ParseError(f"exponent {exp} too large")
        return coef, exp
    if not has_coef:
        raise ParseError(f"expected a t-term, found {kind!r}")
    return coef, 0


def parse_poly(src: str, field: ConstField) -> Poly:
    """Parse a polynomial in x over the field."""
    toks = _Stream(_tokenize(src))
    poly = _parse_poly_tokens(toks, field)
    toks.expect("end")
    return poly


def _parse_poly_tokens(toks: _Stream, field: ConstField) -> Poly:
    terms: dict[int, FFElem] = {}
    sign = 1
    if toks.peek()[0] in ("+", "-"):
        sign = -1 if toks.next()[0] == "-" else 1
    while True:
        coef, exp = _parse_term(toks, field)
        if sign == -1:
            coef = -coef
        prev = terms.get(exp, field.zero)
        terms[exp] = prev + coef
        kind = toks.peek()[0]
        if kind in ("+", "-"):
            sign = -1 if toks.next()[0] == "-" else 1
            continue
        break
    top = max(terms, default=0)
    return Poly(field, [terms.get(i, field.zero) for i in range(top + 1)])


def _parse_term(toks: _Stream, field: ConstField):
    """One term: returns (FFElem coefficient, exponent of x)."""
    kind, value = toks.peek()
    coef = None
    if kind == "int":
        toks.next()
        coef = field.element(value)
    elif kind == "(":
        toks.next()
        digits = _parse_tpoly_coeffs(toks, field.p)
        toks.expect(")")
        if len(digits) > field.k:
            raise ParseError("coefficient in t has degree >= field degree")
        coef = field.from_digits(digits)
    elif kind == "name" and value == "t":
        c, e = _parse_tterm(toks)
        if e >= field.k:
            raise ParseError("coefficient in t has degree >= field degree")
        coef = field.from_digits([0] * e + [c])
    if coef is not None:
        if toks.peek()[0] == "*":
            toks.next()
            exp = _parse_mono(toks)
            return coef, exp
        kind, value = toks.peek()
        if kind == "name" and value == "x":
            return coef, _parse_mono(toks)
        return coef, 0
    kind, value = toks.peek()
    if kind == "name" and value == "x":
        return field.one, _parse_mono(toks)
    raise ParseError(f"expected a term, found {value if value is not None else kind!r}")


def _parse_mono(toks: _Stream) -> int:
    kind, value = toks.next()
    if kind != "name" or value != "x":
        raise ParseError("expected x")
    if toks.peek()[0] == "^":
        toks.next()
        exp = toks.expect("int")[1]
        if exp > _MAX_EXPONENT:
            raise ParseError(f"exponent {exp} too large")
        return exp
    return 1


def parse_ratfunc(src: str, field: ConstField) -> RatFunc:
    """Parse ``poly`` or ``poly / poly``."""
    toks = _Stream(_tokenize(src))
    num = _parse_poly_tokens(toks, field)
    if toks.peek()[0] == "/":
        toks.next()
        den = _parse_poly_tokens(toks, field)
        toks.expect("end")
        if not den:
            raise ParseError("zero denominator")
        return RatFunc(num, den)
    toks.expect("end")
    return RatFunc(num)


def parse_form(src: str, field: ConstField) -> "DiagForm":
    """Parse a comma-separated diagonal form; zero entries are rejected."""
    from qformff.localforms import DiagForm

    parts = _split_top_level(src)
    coeffs = [parse_ratfunc(part, field) for part in parts]
    for c in coeffs:
        if not c:
            raise DegenerateFormError("forms cannot contain a zero coefficient")
    return DiagForm(field, coeffs)


def _split_top_level(src: str):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(src):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(src[start:i])
            start = i + 1
    parts.append(src[start:])
    if any(not p.strip() for p in parts):
        raise ParseError("empty form entry")
    return parts


def parse_place(src: str, field: ConstField) -> Place:
    """Parse a place: a polynomial in x, or the literal ``inf``."""
    if src.strip() == "inf":
        return Place.infinite(field)
    poly = parse_poly(src, field)
    if poly.degree < 1:
        raise ParseError("a finite place needs a polynomial of degree >= 1")
    return Place.finite(poly)


# -- rendering ---------------------------------------------------------------


def _coef_str(field: ConstField, packed: int) -> str:
    if packed < field.p:
        return str(packed)
    digits = []
    v = packed
    while v:
        v, d = divmod(v, field.p)
        digits.append(d)
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        c = digits[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "t" if i == 1 else f"t^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "(" + "+".join(terms) + ")"


def render_poly(poly: Poly) -> str:
    if not poly:
        return "0"
    field = poly.field
    terms = []
    for i in range(poly.degree, -1, -1):
        c = poly.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(_coef_str(field, c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        if c == 1:
            terms.append(mono)
        else:
            terms.append(f"{_coef_str(field, c)}*{mono}")
    return "+".join(terms)


def render_ratfunc(f: RatFunc) -> str:
    if f.den.degree == 0:
        return render_poly(f.num)
    return f"{render_poly(f.num)}/{render_poly(f.den)}"


def render_form(q) -> str:
    return ", ".join(render_ratfunc(c) for c in q.coeffs)
