"""Independent brute-force referees for the decision procedures.

Nothing here relies on quadratic characters, Hilbert symbols, or the
local-global machinery; only field arithmetic, valuations, and exhaustive
search over bounded spaces.  The library's fast algorithms are validated
against these referees both in the test suite and through the CLI's
``--verify`` mode.

Searches are budgeted.  The budget charges the work the search actually
performs: the number of candidate vectors for the plain enumerator, the
sum of the half-space sizes for the meet-in-the-middle route.  A search
that cannot finish within its budget refuses (``BudgetExceededError``)
rather than returning a silent "absent".

The meet-in-the-middle route represents a polynomial value as its vector
of prime-field digits (coefficients unpacked to base p), so that adding
two values is a componentwise addition mod p and whole half-spaces can be
combined, packed into 64-bit keys, and intersected with numpy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from qformff.errors import BudgetExceededError, InvariantError, ZeroInputError
from qformff.ffield import ConstField
from qformff.funcfield import Place, RatFunc
from qformff.localforms import DiagForm, ResidueForm, springer_split
from qformff.polyring import Poly

HARD_CAP = 10**8
_PLAIN_CUTOFF = 4096  # spaces at most this big are enumerated directly
_HALF_LIMIT = 2**25  # memory guard on one meet-in-the-middle half
_FOLD_BLOCK = 2**24  # int16 elements materialized per folding block


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the exhaustive searches.

    ``max_entry_degree`` caps the degree of polynomial entries, and
    likewise the numerator/denominator degrees in the length search.
    ``max_candidates`` caps the performed work, never above 10**8.  The
    seed is threaded into any factoring a search triggers.
    """

    max_entry_degree: int
    max_candidates: int = HARD_CAP
    seed: int = 0

    def __post_init__(self):
        if self.max_entry_degree < 0:
            raise ValueError("max_entry_degree must be nonnegative")
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be positive")

    @property
    def allowance(self) -> int:
        return min(self.max_candidates, HARD_CAP)


class _WorkMeter:
    def __init__(self, allowance: int):
        self.allowance = allowance
        self.spent = 0

    def charge(self, amount: int, what: str):
        if self.spent + amount > self.allowance:
            raise BudgetExceededError(
                f"{what} needs {amount} more candidates "
                f"({self.spent} spent, {self.allowance} allowed)"
            )
        self.spent += amount


def oracle_residue_isotropy(r: ResidueForm) -> bool:
    """Exhaustively decide whether a form over a finite field has a
    nontrivial zero.

    Dynamic programming over the value sets of the partial sums; decides
    the same question as scanning all |K|**dim vectors and refuses, like
    that scan, above 10**8.
    """
    field = r.field
    if r.dim and field.order**r.dim > HARD_CAP:
        raise BudgetExceededError(f"|K|^dim = {field.order ** r.dim} exceeds {HARD_CAP}")
    ctx = field.ctx
    squares = {ctx.mul(v, v) for v in range(field.order)}
    nonzero_squares = {ctx.mul(v, v) for v in range(1, field.order)}
    reachable: set = set()  # partial-sum values using at least one nonzero entry
    for c in r.coeffs:
        scaled_all = [ctx.mul(c.val, s) for s in squares]
        scaled_nz = {ctx.mul(c.val, s) for s in nonzero_squares}
        step = set(scaled_nz)  # all-zero prefix, nonzero entry here
        for z in reachable:
            for s in scaled_all:
                step.add(ctx.add(z, s))
        reachable = step
    return 0 in reachable


def oracle_local_isotropy(q: DiagForm, place: Place) -> bool:
    """Local isotropy by residue-field search alone: split the form by
    valuation parity and search both residue forms exhaustively."""
    q0, q1 = springer_split(q, place)
    return oracle_residue_isotropy(q0) or oracle_residue_isotropy(q1)


# ---------------------------------------------------------------------------
# witness search machinery
# ---------------------------------------------------------------------------


def _poly_from_packed(field: ConstField, packed: int) -> Poly:
    digits = []
    v = packed
    while v:
        v, d = divmod(v, field.q)
        digits.append(d)
    return Poly._raw(field, tuple(digits))


def _clear_denominators(q: DiagForm):
    """Square-scale each coefficient into F_q[x]; witnesses transfer back by
    multiplying entry i with the old denominator."""
    polys, dens = [], []
    for a in q.coeffs:
        polys.append(a.num * a.den)
        dens.append(a.den)
    return polys, dens


def _plain_stage(field: ConstField, coeffs, degree: int):
    """Ordered exhaustive scan: entries are packed values below
    q**(degree+1), vectors in lexicographic order, first nonzero entry
    monic.  Returns the first witness or None."""
    ctx = field.ctx
    S = field.q ** (degree + 1)
    tables = []
    for c in coeffs:
        rows = []
        for v in range(S):
            vp = list(_poly_from_packed(field, v).coeffs)
            rows.append(ctx.poly_mul(list(c.coeffs), ctx.poly_mul(vp, vp)))
        tables.append(rows)
    monic = [bool(v) and _poly_from_packed(field, v).coeffs[-1] == 1 for v in range(S)]
    n = len(coeffs)
    for vec in itertools.product(range(S), repeat=n):
        first = next((v for v in vec if v), None)
        if first is None or not monic[first]:
            continue
        total: list = []
        for i, v in enumerate(vec):
            row = tables[i][v]
            if row:
                if len(row) > len(total):
                    total += [0] * (len(row) - len(total))
                for j, cj in enumerate(row):
                    total[j] = ctx.add(total[j], cj)
        while total and not total[-1]:
            total.pop()
        if not total:
            return [_poly_from_packed(field, v) for v in vec]
    return None


def _squares_table(p: int, degree: int) -> np.ndarray:
    """(p**(degree+1), 2*degree+1) int32 matrix of squared polynomials
    over a prime field."""
    S = p ** (degree + 1)
    idx = np.arange(S, dtype=np.int64)
    digits = (idx[:, None] // p ** np.arange(degree + 1, dtype=np.int64)) % p
    out = np.zeros((S, 2 * degree + 1), dtype=np.int64)
    for i in range(degree + 1):
        for j in range(degree + 1):
            out[:, i + j] += digits[:, i] * digits[:, j]
    return (out % p).astype(np.int32)


def _entry_rows(field: ConstField, coeff: Poly, degree: int, width: int) -> np.ndarray:
    """Prime-digit rows of {coeff * v**2 : deg v <= degree}.

    Shape (q**(degree+1), width*k): width polynomial coefficients, each
    unpacked into the k base-p digits of F_q.
    """
    p, k, q = field.p, field.k, field.q
    S = q ** (degree + 1)
    if k == 1:
        sq = _squares_table(p, degree)
        rows = np.zeros((S, width), dtype=np.int64)
        for i, ci in enumerate(coeff.coeffs):
            if ci:
                rows[:, i : i + sq.shape[1]] += ci * sq
        return (rows % p).astype(np.int16)
    ctx = field.ctx
    rows = np.zeros((S, width * k), dtype=np.int16)
    cl = list(coeff.coeffs)
    for v in range(S):
        vp = list(_poly_from_packed(field, v).coeffs)
        prod = ctx.poly_mul(cl, ctx.poly_mul(vp, vp))
        for j, cf in enumerate(prod):
            for s in range(k):
                cf, d = divmod(cf, p)
                rows[v, j * k + s] = d
    return rows


def _fold_packed(p: int, parts, offset_digits, ncols: int) -> np.ndarray:
    """Packed base-p values of {offset + sum over parts}, enumerated
    outer-first lexicographically over the part rows."""
    if p**ncols >= 2**63:
        raise BudgetExceededError("value width overflows 64-bit packing")
    weights = p ** np.arange(ncols, dtype=np.int64)
    acc = np.zeros((1, ncols), dtype=np.int16)
    if offset_digits is not None:
        acc[0, : len(offset_digits)] = offset_digits
    for rows in parts:
        S = rows.shape[0]
        total = acc.shape[0] * S
        if total > _HALF_LIMIT:
            raise BudgetExceededError(f"half space {total} exceeds the memory guard")
        new = np.empty((total, ncols), dtype=np.int16)
        block = max(1, _FOLD_BLOCK // max(S * ncols, 1))
        for start in range(0, acc.shape[0], block):
            stop = min(start + block, acc.shape[0])
            piece = (acc[start:stop, None, :] + rows[None, :, :]) % p
            new[start * S : stop * S] = piece.reshape(-1, ncols)
        acc = new
    return acc.astype(np.int64) @ weights


_half_cache: dict = {}


def _unpack_offset(field: ConstField, t: Poly, width: int):
    """Prime-digit layout of a target polynomial, matching _entry_rows."""
    p, k = field.p, field.k
    out = np.zeros(width * k, dtype=np.int16)
    for j, cf in enumerate(t.coeffs):
        for s in range(k):
            cf, d = divmod(cf, p)
            out[j * k + s] = d
    return out


def _half_values(field: ConstField, coeffs, degree: int, offset: Poly | None, width: int):
    """Sorted unique packed values of one half, and whether the value 0 is
    reached by some index other than 0; cached across calls."""
    key = (
        field,
        tuple(sorted(c.coeffs for c in coeffs)),
        degree,
        offset.coeffs if offset is not None else None,
        width,
    )
    hit = _half_cache.get(key)
    if hit is not None:
        return hit
    parts = [_entry_rows(field, c, degree, width) for c in coeffs]
    off = _unpack_offset(field, offset, width) if offset is not None else None
    packed = _fold_packed(field.p, parts, off, width * field.k)
    zero_hits = np.flatnonzero(packed == 0)
    has_nonzero_zero = bool(zero_hits.size and (zero_hits[0] > 0 or zero_hits.size > 1))
    result = (np.unique(packed), has_nonzero_zero)
    if len(_half_cache) > 512:
        _half_cache.clear()
    _half_cache[key] = result
    return result


def _half_find(field: ConstField, coeffs, degree: int, offset: Poly | None, width: int, target: int, skip_zero_index: bool) -> int:
    """Minimal enumeration index of the half reaching the packed target."""
    parts = [_entry_rows(field, c, degree, width) for c in coeffs]
    off = _unpack_offset(field, offset, width) if offset is not None else None
    packed = _fold_packed(field.p, parts, off, width * field.k)
    hits = np.flatnonzero(packed == target)
    if skip_zero_index and hits.size and hits[0] == 0:
        hits = hits[1:]
    if not hits.size:
        raise InvariantError("lost a matched value during recovery")  # pragma: no cover
    return int(hits[0])


def _decode_half(field: ConstField, count: int, degree: int, index: int):
    """Entry polynomials for an enumeration index of a count-entry half."""
    S = field.q ** (degree + 1)
    vals = []
    for _ in range(count):
        index, v = divmod(index, S)
        vals.append(v)
    vals.reverse()
    return [_poly_from_packed(field, v) for v in vals]


def _negated(field: ConstField, f: Poly) -> Poly:
    ctx = field.ctx
    return Poly._raw(field, tuple(ctx.neg(c) for c in f.coeffs))


def _mitm_stage(field: ConstField, coeffs, degree: int):
    """Meet-in-the-middle search for sum(coeff_i * v_i**2) = 0 over nonzero
    vectors with entry degrees <= degree.  Complete; returns entry
    polynomials (deterministically chosen) or None."""
    n = len(coeffs)
    left = list(coeffs[: (n + 1) // 2])
    right = list(coeffs[(n + 1) // 2 :])
    width = max(c.degree for c in coeffs) + 2 * degree + 1
    neg_right = [_negated(field, r) for r in right]
    a_vals, a_zero = _half_values(field, left, degree, None, width)
    b_vals, b_zero = _half_values(field, neg_right, degree, None, width)
    common = np.intersect1d(a_vals, b_vals, assume_unique=True)
    target = None
    if common.size and common[0] == 0:
        if a_zero or b_zero:
            target = 0
        common = common[1:]
    if target is None:
        if not common.size:
            return None
        target = int(common[0])
    if target == 0:
        if a_zero:
            ia = _half_find(field, left, degree, None, width, 0, skip_zero_index=True)
            ib = 0
        else:
            ia = 0
            ib = _half_find(field, neg_right, degree, None, width, 0, skip_zero_index=True)
    else:
        ia = _half_find(field, left, degree, None, width, target, skip_zero_index=False)
        ib = _half_find(field, neg_right, degree, None, width, target, skip_zero_index=False)
    return _decode_half(field, len(left), degree, ia) + _decode_half(field, len(right), degree, ib)


def oracle_isotropy_witness(q: DiagForm, budget: SearchBudget):
    """Search for a nonzero polynomial vector v with q(v) = 0.

    Scans entry degrees 0, 1, ... up to the budget's bound, exhaustively
    at each stage; one-sided (absence within the budget proves nothing).
    The returned witness is re-verified exactly and normalized so its
    first nonzero entry is monic.
    """
    field = q.field
    polys, dens = _clear_denominators(q)
    n = q.dim
    meter = _WorkMeter(budget.allowance)
    for degree in range(budget.max_entry_degree + 1):
        S = field.q ** (degree + 1)
        space = S**n
        if space <= _PLAIN_CUTOFF or n == 1:
            meter.charge(space, f"degree-{degree} stage")
            found = _plain_stage(field, polys, degree)
        else:
            n_left = (n + 1) // 2
            meter.charge(S**n_left + S ** (n - n_left), f"degree-{degree} stage")
            found = _mitm_stage(field, polys, degree)
        if found is not None:
            witness = [v * d for v, d in zip(found, dens)]
            total = RatFunc.constant(field, 0)
            for a, w in zip(q.coeffs, witness):
                total = total + a * RatFunc(w) * RatFunc(w)
            if total:
                raise InvariantError("witness failed exact verification")  # pragma: no cover
            lead = next(w for w in witness if w).leading_coefficient()
            inv = lead.inverse()
            return tuple(w * inv for w in witness)
    return None


def oracle_length_upper(a: RatFunc, n: int, budget: SearchBudget):
    """Search for b_1, ..., b_n in F_q(x) with sum(b_i**2) = a.

    Common-denominator ansatz: b_i = c_i / d with d monic, deg c_i and
    deg d bounded by the budget's degree.  Returns a representation or
    None; one-sided.
    """
    if not a:
        raise ZeroInputError("zero has no sum-of-squares representation")
    if n < 1:
        raise ValueError("need at least one square")
    field = a.field
    bound = budget.max_entry_degree
    meter = _WorkMeter(budget.allowance)
    one = Poly.constant(field, 1)
    S = field.q ** (bound + 1)
    for dd in range(bound + 1):
        for packed in range(field.q**dd):
            den = _poly_from_packed(field, packed + field.q**dd)  # monic, degree dd
            target = a * RatFunc(den) * RatFunc(den)
            if target.den.degree != 0:
                continue
            t = target.num
            n_left = n // 2 + n % 2
            n_right = n - n_left
            space = S**n
            if space <= _PLAIN_CUTOFF:
                meter.charge(space, f"denominator {den}")
                found = _sos_plain(field, n, t, bound)
            else:
                meter.charge(S**n_left + S**n_right, f"denominator {den}")
                found = _sos_mitm(field, [one] * n_left, [one] * n_right, t, bound)
            if found is not None:
                rep = tuple(RatFunc(c, den) for c in found)
                total = RatFunc.constant(field, 0)
                for b in rep:
                    total = total + b * b
                if total != a:
                    raise InvariantError("representation failed exact verification")  # pragma: no cover
                return rep
    return None


def _sos_mitm(field: ConstField, left, right, t: Poly, degree: int):
    """Meet-in-the-middle for sum(left c_i**2) = t - sum(right c_j**2)."""
    width = max(2 * degree + 1, t.degree + 1)
    minus_one = Poly.constant(field, -1)
    neg_right = [minus_one * r for r in right]
    a_vals, _ = _half_values(field, left, degree, None, width)
    if neg_right:
        b_vals, _ = _half_values(field, neg_right, degree, t, width)
    else:
        off = _unpack_offset(field, t, width)
        weights = field.p ** np.arange(width * field.k, dtype=np.int64)
        b_vals = np.asarray([int(off.astype(np.int64) @ weights)])
    common = np.intersect1d(a_vals, b_vals, assume_unique=True)
    if not common.size:
        return None
    target = int(common[0])
    ia = _half_find(field, left, degree, None, width, target, skip_zero_index=False)
    ib = (
        _half_find(field, neg_right, degree, t, width, target, skip_zero_index=False)
        if neg_right
        else 0
    )
    return _decode_half(field, len(left), degree, ia) + _decode_half(field, len(right), degree, ib)


def _sos_plain(field: ConstField, n: int, t: Poly, degree: int):
    """Direct scan for sum(c_i**2) = t with deg c_i <= degree."""
    ctx = field.ctx
    S = field.q ** (degree + 1)
    squares = []
    for v in range(S):
        vp = list(_poly_from_packed(field, v).coeffs)
        squares.append(ctx.poly_mul(vp, vp))
    t_list = list(t.coeffs)
    for vec in itertools.product(range(S), repeat=n):
        total: list = []
        for v in vec:
            row = squares[v]
            if row:
                if len(row) > len(total):
                    total += [0] * (len(row) - len(total))
                for j, cj in enumerate(row):
                    total[j] = ctx.add(total[j], cj)
        while total and not total[-1]:
            total.pop()
        if total == t_list:
            return [_poly_from_packed(field, v) for v in vec]
    return None
