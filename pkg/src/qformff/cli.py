"""Command-line interface.

Exit codes: 0 success, 1 parse/validation error, 2 internal invariant
violation, 3 oracle verification mismatch.  Plain output uses domain words
(isotropic/anisotropic, hyperbolic/not hyperbolic); ``--json`` emits one
object with the result and the per-place local data that produced it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from qformff import globalforms, localforms, oracle
from qformff.errors import InvariantError, ParseError, QformError
from qformff.ffield import ConstField
from qformff.funcfield import Place, is_global_square, support
from qformff.parsing import (
    parse_field,
    parse_form,
    parse_place,
    parse_poly,
    parse_ratfunc,
    render_poly,
    render_ratfunc,
)
from qformff.polyring import factor

DEFAULT_BUDGET_DEGREE = 3

_VERIFIABLE = {"isotropic", "local-isotropic", "local-aniso-dim", "hilbert", "length", "square"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(_fail(message))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="factorization seed (or QFORMFF_SEED)")
    common.add_argument("--place", default=None, help="place: a polynomial in x, or 'inf'")
    common.add_argument("--verify", action="store_true", help="cross-check with the brute-force oracle")
    common.add_argument(
        "--budget-degree",
        type=int,
        default=None,
        help=f"oracle search degree bound (default {DEFAULT_BUDGET_DEGREE})",
    )

    parser = _Parser(prog="qformff", description="Quadratic form invariants over GF(q)(x), q odd.")
    parser.add_argument("--field", required=True, help="constant field, e.g. \"GF(3)\" or \"GF(9, t^2+1)\"")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("isotropic", "decide whether a diagonal form has a nontrivial zero"),
        ("hyperbolic", "decide whether a diagonal form is hyperbolic"),
        ("aniso-dim", "dimension of the anisotropic part"),
        ("witt-index", "number of split hyperbolic planes"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("form", help="comma-separated diagonal coefficients")

    p = sub.add_parser("length", parents=[common], help="least number of squares summing to the element")
    p.add_argument("element")
    p = sub.add_parser("square", parents=[common], help="is the element a square in GF(q)(x)?")
    p.add_argument("element")
    sub.add_parser("level", parents=[common], help="level of GF(q)(x)")
    sub.add_parser("pythagoras", parents=[common], help="Pythagoras number of GF(q)(x)")
    p = sub.add_parser("hilbert", parents=[common], help="Hilbert symbol (a, b) at --place")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("local-isotropic", parents=[common], help="isotropy over the completion at --place")
    p.add_argument("form")
    p = sub.add_parser("local-aniso-dim", parents=[common], help="local anisotropic dimension at --place")
    p.add_argument("form")
    p = sub.add_parser("factor", parents=[common], help="factor a polynomial over GF(q)")
    p.add_argument("poly")
    p = sub.add_parser("verify", parents=[common], help="run every oracle cross-check on a form")
    p.add_argument("form")
    return parser


def _field_json(field: ConstField):
    out = {"p": field.p, "k": field.k}
    if field.modulus is not None:
        from qformff.ffield import _tpoly_str

        out["modulus"] = _tpoly_str(field.modulus)
    return out


def _require_place(ns, field: ConstField) -> Place:
    if ns.place is None:
        raise ParseError("this command needs --place")
    return parse_place(ns.place, field)


def _budget(ns) -> oracle.SearchBudget:
    degree = ns.budget_degree if ns.budget_degree is not None else DEFAULT_BUDGET_DEGREE
    return oracle.SearchBudget(max_entry_degree=degree, seed=ns.seed or 0)


def _verify_command(ns, field, seed):
    """Bundle of oracle cross-checks for a form: global isotropy against the
    witness search, local isotropy against residue search at each relevant
    place.  Returns (all_consistent, detail rows, conclusive)."""
    q = parse_form(ns.form, field)
    rows = []
    ok = True
    conclusive = True
    decided = globalforms.is_isotropic(q, rng_seed=seed)
    witness = oracle.oracle_isotropy_witness(q, _budget(ns))
    if witness is None:
        rows.append({"place": "global", "value": "no witness within budget"})
        conclusive = conclusive and not decided
    else:
        rows.append({"place": "global", "value": f"witness ({', '.join(render_poly(w) for w in witness)})"})
        ok = ok and decided
    for p in globalforms.relevant_places(q, rng_seed=seed):
        fast = localforms.local_is_isotropic(q, p)
        slow = oracle.oracle_local_isotropy(q, p)
        rows.append({"place": str(p), "value": f"local isotropy {fast} == oracle {slow}"})
        ok = ok and fast == slow
    return ok, rows, conclusive


def run(ns) -> int:
    field = parse_field(ns.field)
    seed = ns.seed
    if seed is None and os.environ.get("QFORMFF_SEED"):
        seed = int(os.environ["QFORMFF_SEED"])

    places: list = []
    local: list = []
    verified: bool | None = None
    mismatch = False
    inconclusive_note = None

    cmd = ns.command
    if cmd in ("isotropic", "hyperbolic", "aniso-dim", "witt-index"):
        q = parse_form(ns.form, field)
        rel = globalforms.relevant_places(q, rng_seed=seed)
        places = [str(p) for p in rel]
        if cmd == "isotropic":
            result = globalforms.is_isotropic(q, rng_seed=seed)
            local = [{"place": str(p), "value": localforms.local_is_isotropic(q, p)} for p in rel]
            plain = "isotropic" if result else "anisotropic"
        elif cmd == "hyperbolic":
            result = globalforms.is_hyperbolic(q, rng_seed=seed)
            local = [{"place": str(p), "value": localforms.local_is_hyperbolic(q, p)} for p in rel]
            plain = "hyperbolic" if result else "not hyperbolic"
        else:
            dims = [{"place": str(p), "value": localforms.local_anisotropic_dimension(q, p)} for p in rel]
            local = dims
            aniso = max(d["value"] for d in dims)
            result = aniso if cmd == "aniso-dim" else (q.dim - aniso) // 2
            plain = str(result)
        if ns.verify and cmd == "isotropic":
            witness = oracle.oracle_isotropy_witness(q, _budget(ns))
            if witness is not None:
                verified = bool(result)
                mismatch = not result
            else:
                verified = not result
                if result:
                    inconclusive_note = "no witness within budget; isotropy not confirmed"
        input_text = ns.form
    elif cmd == "length":
        a = parse_ratfunc(ns.element, field)
        result = globalforms.length(a, rng_seed=seed)
        odd = [(p, v) for p, v in support(a, rng_seed=seed) if v % 2]
        places = [str(p) for p, _ in odd]
        local = [{"place": str(p), "value": localforms.local_length(a, p)} for p, _ in odd]
        plain = str(result)
        if ns.verify:
            upper = oracle.oracle_length_upper(a, result, _budget(ns))
            lower = oracle.oracle_length_upper(a, result - 1, _budget(ns)) if result > 1 else None
            if lower is not None:
                verified = False
                mismatch = True
            elif upper is not None:
                verified = True
            else:
                verified = False
                inconclusive_note = "no representation within budget; upper bound not confirmed"
        input_text = ns.element
    elif cmd == "square":
        a = parse_ratfunc(ns.element, field)
        result = is_global_square(a)
        plain = "square" if result else "not a square"
        if ns.verify:
            rep = oracle.oracle_length_upper(a, 1, _budget(ns)) if a else None
            if rep is not None:
                verified = bool(result)
                mismatch = not result
            else:
                verified = not result
                if result:
                    inconclusive_note = "no square root within budget"
        input_text = ns.element
    elif cmd in ("level", "pythagoras"):
        result = globalforms.level(field) if cmd == "level" else globalforms.pythagoras_number(field)
        plain = str(result)
        input_text = ""
    elif cmd == "hilbert":
        a = parse_ratfunc(ns.a, field)
        b = parse_ratfunc(ns.b, field)
        place = _require_place(ns, field)
        result = localforms.hilbert_symbol(a, b, place)
        places = [str(place)]
        local = [{"place": str(place), "value": result}]
        plain = str(result)
        if ns.verify:
            form = localforms.DiagForm(field, [field.one, -a, -b])
            agreed = oracle.oracle_local_isotropy(form, place) == (result == 1)
            verified = agreed
            mismatch = not agreed
        input_text = f"{ns.a}, {ns.b}"
    elif cmd in ("local-isotropic", "local-aniso-dim"):
        q = parse_form(ns.form, field)
        place = _require_place(ns, field)
        places = [str(place)]
        if cmd == "local-isotropic":
            result = localforms.local_is_isotropic(q, place)
            plain = "isotropic" if result else "anisotropic"
            if ns.verify:
                agreed = oracle.oracle_local_isotropy(q, place) == result
                verified = agreed
                mismatch = not agreed
        else:
            result = localforms.local_anisotropic_dimension(q, place)
            plain = str(result)
            if ns.verify:
                agreed = oracle.oracle_local_isotropy(q, place) == (result < q.dim)
                verified = agreed
                mismatch = not agreed
        local = [{"place": str(place), "value": result}]
        input_text = ns.form
    elif cmd == "factor":
        f = parse_poly(ns.poly, field)
        fac = factor(f, rng_seed=seed)
        pieces = []
        for g, e in fac.factors:
            s = f"({render_poly(g)})"
            pieces.append(s if e == 1 else f"{s}^{e}")
        unit = fac.unit
        if not fac.factors or unit.val != 1:
            pieces.insert(0, str(unit.val) if field.k == 1 else repr(unit))
        result = " * ".join(pieces)
        places = [render_poly(g) for g, _ in fac.factors]
        local = [{"place": render_poly(g), "value": e} for g, e in fac.factors]
        plain = result
        input_text = ns.poly
    elif cmd == "verify":
        ok, rows, conclusive = _verify_command(ns, field, seed)
        result = ok
        local = rows
        plain = "ok" if ok else "mismatch"
        verified = ok and conclusive
        mismatch = not ok
        if ok and not conclusive:
            inconclusive_note = "some oracle checks were inconclusive within budget"
        input_text = ns.form
    else:  # pragma: no cover
        raise ParseError(f"unknown command {cmd!r}")

    if ns.verify and cmd not in _VERIFIABLE and cmd != "verify":
        print(f"note: --verify is not available for {cmd}", file=sys.stderr)

    if ns.json:
        obj = {
            "command": cmd,
            "field": _field_json(field),
            "input": input_text,
            "result": result,
            "details": {"places": places, "local": local},
        }
        if verified is not None:
            obj["verified"] = verified
        print(json.dumps(obj, sort_keys=False))
    else:
        print(plain)
        if verified is not None:
            if mismatch:
                print("verification: MISMATCH")
            elif inconclusive_note:
                print(f"verification: inconclusive ({inconclusive_note})")
            else:
                print("verification: confirmed")

    return 3 if mismatch else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return run(ns)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (QformError, ValueError, ZeroDivisionError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
