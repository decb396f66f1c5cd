"""The ``wittc`` command line: every operation over JSON, plus selfcheck.

One JSON report per invocation on stdout (stable key order, so reruns are
byte-identical); human diagnostics on stderr.  Exit codes: 0 ok,
1 mathematical failure or mismatch, 2 usage error, 3 selfcheck violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import FiniteAlgebra, point_algebra
from .corresp import compose, point_projection, underlying_form, validate
from .errors import WittcError
from .euler import (
    EulerDatum,
    bezoutian_form,
    euler_correspondence,
    plain_trace_form,
    scaled_trace_form,
    split_by_factors,
)
from .fields import Field, Rationals
from .jsonio import (
    algebra_from_json,
    correspondence_from_json,
    correspondence_to_json,
    field_from_json,
    field_to_json,
    invariants_to_json,
    poly_from_json,
    poly_to_json,
    quadspace_from_json,
    quadspace_to_json,
)
from .poly import Poly, parse_poly, poly_to_str
from .quadform import (
    QuadSpace,
    diagonalize,
    is_witt_trivial,
    orthogonal_sum,
    witt_equal,
    witt_invariants,
)
from .rigidity import (
    HomotopyPencil,
    pencil_check,
    sqmet_class,
    square_unit_is_identity,
)
from .selfcheck import run_selfcheck


class UsageError(Exception):
    pass


def _read_json_arg(text: str):
    """Inline JSON, '-' for stdin, or a file path."""
    if text == "-":
        raw = sys.stdin.read()
    elif text.lstrip().startswith(("{", "[")):
        raw = text
    else:
        if not os.path.exists(text):
            raise UsageError(f"no such file: {text}")
        with open(text, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from exc


def _parse_field(text: str) -> Field:
    if text.strip() in ("Q", '"Q"'):
        return Rationals()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed field description: {exc}") from exc
    return field_from_json(obj)


def _parse_poly_arg(field: Field, text: str) -> Poly:
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed polynomial JSON: {exc}") from exc
        return poly_from_json(field, obj)
    if stripped and stripped.lstrip("+-").isdigit():
        return Poly.constant(field, int(stripped))
    return parse_poly(field, text)


def _parse_elem(field: Field, text: str):
    return field.elem_from_str(text)


def _space_summary(s):
    return {
        "gram": quadspace_to_json(s)["gram"],
        "invariants": invariants_to_json(witt_invariants(s)),
    }


def _report(status: str, payload, provenance) -> dict:
    return {"status": status, "payload": payload, "provenance": provenance}


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2))
    sys.stdout.write("\n")


# -- verb handlers ---------------------------------------------------------


def _run_form(args) -> tuple[int, dict]:
    sub = args.subverb
    a = quadspace_from_json(_read_json_arg(args.inputs[0]))
    prov = {"verb": f"form {sub}", "inputs": {"space": quadspace_to_json(a)}}
    if sub == "diag":
        d = diagonalize(a)
        F = a.field
        payload = {
            "entries": [F.elem_to_str(e) for e in d.entries],
            "basis_change": [[F.elem_to_str(x) for x in row] for row in d.basis_change],
        }
        return 0, _report("ok", payload, prov)
    if sub == "invariants":
        payload = {"invariants": invariants_to_json(witt_invariants(a))}
        return 0, _report("ok", payload, prov)
    if sub == "witt-trivial":
        payload = {
            "witt_trivial": is_witt_trivial(a),
            "invariants": invariants_to_json(witt_invariants(a)),
        }
        return 0, _report("ok", payload, prov)
    # witt-equal
    if len(args.inputs) != 2:
        raise UsageError("form witt-equal needs two spaces")
    b = quadspace_from_json(_read_json_arg(args.inputs[1]))
    prov["inputs"]["other"] = quadspace_to_json(b)
    eq = witt_equal(a, b)
    payload = {
        "witt_equal": eq,
        "left_invariants": invariants_to_json(witt_invariants(a)),
        "right_invariants": invariants_to_json(witt_invariants(b)),
    }
    return (0, _report("ok", payload, prov)) if eq else (1, _report("mismatch", payload, prov))


def _run_euler(args) -> tuple[int, dict]:
    field = _parse_field(args.field)
    f = _parse_poly_arg(field, args.f)
    unit = _parse_elem(field, args.unit)
    prov = {
        "verb": "euler",
        "inputs": {
            "field": field_to_json(field),
            "f": poly_to_json(f),
            "unit": field.elem_to_str(unit),
        },
        "operations": ["bezoutian_form"],
    }
    s = bezoutian_form(f, unit)
    payload = {"f": poly_to_str(f), **_space_summary(s)}
    status, code = "ok", 0
    if args.trace_oracle:
        prov["operations"].append("scaled_trace_form")
        o = scaled_trace_form(f, unit)
        equal = o.gram == s.gram
        payload["trace_gram"] = quadspace_to_json(o)["gram"]
        payload["oracle_equal"] = equal
        if not equal:
            status, code = "mismatch", 1
    if args.split:
        prov["operations"].append("split_by_factors")
        f1 = _parse_poly_arg(field, args.split[0])
        f2 = _parse_poly_arg(field, args.split[1])
        res = split_by_factors(s, f1, f2)
        additive = witt_invariants(orthogonal_sum(res.first, res.second)) == witt_invariants(s)
        payload["split"] = {
            "f1": poly_to_json(f1),
            "f2": poly_to_json(f2),
            "first": _space_summary(res.first),
            "second": _space_summary(res.second),
            "basis_change": [
                [field.elem_to_str(x) for x in row] for row in res.basis_change
            ],
            "idempotent": poly_to_json(res.idempotent),
            "invariants_additive": additive,
        }
        if not additive:
            status, code = "mismatch", 1
    if args.target:
        prov["operations"].append("euler_correspondence")
        tgt = _read_json_arg(args.target)
        target = algebra_from_json({"field": field_to_json(field), **tgt})
        g = poly_from_json(field, tgt["g"])
        datum = EulerDatum(f=f, unit=unit, target=target, g=g)
        eps = euler_correspondence(datum)
        violations = validate(eps)
        payload["correspondence"] = correspondence_to_json(eps)
        payload["valid"] = not violations
        if violations:
            payload["violations"] = violations
            status, code = "error", 1
    return code, _report(status, payload, prov)


def _run_transfer(args) -> tuple[int, dict]:
    field = _parse_field(args.field)
    p = _parse_poly_arg(field, args.min_poly)
    unit = _parse_elem(field, args.unit)
    target = FiniteAlgebra(field, p)
    datum = EulerDatum(f=p, unit=unit, target=target, g=Poly.t(field))
    eps = euler_correspondence(datum)
    violations = validate(eps)
    composite = compose(point_projection(target), eps)
    under = underlying_form(composite)
    payload = {
        "transfer": correspondence_to_json(eps),
        "valid": not violations,
        "underlying_invariants": invariants_to_json(
            witt_invariants(underlying_form(eps))
        ),
        "point_composite_invariants": invariants_to_json(witt_invariants(under)),
        # the unscaled pairing tr(a*b), for comparison with the transfer form:
        # the two can lie in different Witt classes
        "plain_trace_invariants": invariants_to_json(
            witt_invariants(plain_trace_form(p))
        ),
    }
    n = p.degree
    if n % 2:
        res = sqmet_class(Poly.t(field), n, unit)
        lam_space = QuadSpace(field, [[field.coerce(res.lam)]])
        payload["lambda_class"] = str(res.lam)
        payload["composite_equals_lambda"] = witt_equal(under, lam_space)
    prov = {
        "verb": "transfer",
        "inputs": {
            "field": field_to_json(field),
            "min_poly": poly_to_json(p),
            "unit": field.elem_to_str(unit),
        },
        "operations": ["euler_correspondence", "compose", "underlying_form"],
    }
    code = 1 if violations else 0
    return code, _report("ok" if not violations else "error", payload, prov)


def _run_compose(args) -> tuple[int, dict]:
    g = correspondence_from_json(_read_json_arg(args.left))
    f = correspondence_from_json(_read_json_arg(args.right))
    out = compose(g, f)
    payload = {"composite": correspondence_to_json(out), "valid": True}
    if out.source.is_point:
        payload["underlying_invariants"] = invariants_to_json(
            witt_invariants(underlying_form(out))
        )
    prov = {
        "verb": "compose",
        "inputs": {
            "left": correspondence_to_json(g),
            "right": correspondence_to_json(f),
        },
        "operations": ["compose", "validate"],
    }
    return 0, _report("ok", payload, prov)


def _run_lemma(args) -> tuple[int, dict]:
    field = _parse_field(args.field)
    if args.subverb == "sqmet":
        e = _parse_poly_arg(field, args.e)
        unit = _parse_elem(field, args.unit)
        res = sqmet_class(e, args.n, unit)
        payload = {"metabolic": res.metabolic}
        if not res.metabolic:
            payload["reduced"] = _space_summary(res.reduced)
            if res.lam is not None:
                payload["lambda"] = str(res.lam)
        prov = {
            "verb": "lemma sqmet",
            "inputs": {
                "field": field_to_json(field),
                "e": poly_to_json(e),
                "n": args.n,
                "unit": field.elem_to_str(unit),
            },
            "operations": ["sqmet_class"],
        }
        return 0, _report("ok", payload, prov)
    # square-unit
    q = _parse_elem(field, args.q)
    ok, witness = square_unit_is_identity(point_algebra(field), [q])
    payload = {"is_square": ok, "witness": field.elem_to_str(witness) if ok else None}
    prov = {
        "verb": "lemma square-unit",
        "inputs": {"field": field_to_json(field), "q": field.elem_to_str(q)},
        "operations": ["square_unit_is_identity"],
    }
    return 0, _report("ok", payload, prov)


def _run_homotopy(args) -> tuple[int, dict]:
    field = _parse_field(args.field)
    f0 = _parse_poly_arg(field, args.f0)
    f1 = _parse_poly_arg(field, args.f1)
    unit = _parse_elem(field, args.unit)
    pencil = HomotopyPencil(f0, f1, unit)
    samples = None
    if args.samples:
        samples = [_parse_elem(field, s) for s in args.samples.split(",")]
    rep = pencil_check(pencil, samples)
    payload = {
        "samples": [field.elem_to_str(x) for x in rep.lambdas],
        "witt_equal": rep.witt_equal,
    }
    if rep.witt_equal:
        payload["class"] = invariants_to_json(rep.invariants)
    else:
        payload["first_mismatch"] = field.elem_to_str(rep.first_mismatch)
    prov = {
        "verb": "homotopy",
        "inputs": {
            "field": field_to_json(field),
            "f0": poly_to_json(f0),
            "f1": poly_to_json(f1),
            "unit": field.elem_to_str(unit),
        },
        "operations": ["pencil_check"],
    }
    if rep.witt_equal:
        return 0, _report("ok", payload, prov)
    return 1, _report("mismatch", payload, prov)


def _run_selfcheck(args) -> tuple[int, dict]:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("WITTC_SEED", "0"))
    all_ok, results = run_selfcheck(seed, args.iters, args.inject_fault)
    width = max(len(name) for name, _, _ in results)
    for name, ok, detail in results:
        sys.stderr.write(f"{name:<{width}}  {'pass' if ok else 'FAIL'}  {detail}\n")
    payload = {
        "seed": seed,
        "iters": args.iters,
        "all_ok": all_ok,
        "results": [
            {"suite": name, "ok": ok, "detail": detail} for name, ok, detail in results
        ],
    }
    prov = {"verb": "selfcheck", "inputs": {"seed": seed, "iters": args.iters}}
    if all_ok:
        return 0, _report("ok", payload, prov)
    return 3, _report("error", payload, prov)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wittc",
        description="Exact quadratic-space and Witt-class computations.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p_form = sub.add_parser("form", help="operations on quadratic spaces")
    p_form.add_argument(
        "subverb", choices=["diag", "invariants", "witt-equal", "witt-trivial"]
    )
    p_form.add_argument("inputs", nargs="+", help="space JSON (inline, file, or -)")

    p_euler = sub.add_parser("euler", help="forms from a monic polynomial")
    p_euler.add_argument("--f", required=True, help='polynomial ("t^3-t" or JSON)')
    p_euler.add_argument("--unit", default="1")
    p_euler.add_argument("--field", default="Q")
    p_euler.add_argument("--split", nargs=2, metavar=("F1", "F2"))
    p_euler.add_argument("--trace-oracle", action="store_true")
    p_euler.add_argument("--target", help='{"modulus": ..., "g": ...}')

    p_tr = sub.add_parser("transfer", help="transfer correspondence from a modulus")
    p_tr.add_argument("--min-poly", required=True)
    p_tr.add_argument("--unit", default="1")
    p_tr.add_argument("--field", default="Q")

    p_comp = sub.add_parser("compose", help="compose two correspondences")
    p_comp.add_argument("left", help="the second map g (JSON/file/-)")
    p_comp.add_argument("right", help="the first map f (JSON/file/-)")

    p_lem = sub.add_parser("lemma", help="reduction lemmas")
    lem_sub = p_lem.add_subparsers(dest="subverb", required=True)
    p_sq = lem_sub.add_parser("sqmet")
    p_sq.add_argument("--e", required=True)
    p_sq.add_argument("--n", type=int, required=True)
    p_sq.add_argument("--unit", default="1")
    p_sq.add_argument("--field", default="Q")
    p_su = lem_sub.add_parser("square-unit")
    p_su.add_argument("--q", required=True)
    p_su.add_argument("--field", default="Q")

    p_hom = sub.add_parser("homotopy", help="pencil specialization check")
    p_hom.add_argument("--f0", required=True)
    p_hom.add_argument("--f1", required=True)
    p_hom.add_argument("--unit", default="1")
    p_hom.add_argument("--samples", help="comma-separated interior sample points")
    p_hom.add_argument("--field", default="Q")

    p_sc = sub.add_parser("selfcheck", help="run every invariant suite")
    p_sc.add_argument("--seed", type=int, default=None)
    p_sc.add_argument("--iters", type=int, default=20)
    p_sc.add_argument("--inject-fault", default=None, help=argparse.SUPPRESS)
    return ap


_HANDLERS = {
    "form": _run_form,
    "euler": _run_euler,
    "transfer": _run_transfer,
    "compose": _run_compose,
    "lemma": _run_lemma,
    "homotopy": _run_homotopy,
    "selfcheck": _run_selfcheck,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handler = _HANDLERS[args.verb]
    try:
        code, report = handler(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except WittcError as exc:
        if _is_usage_shaped(exc):
            sys.stderr.write(f"usage error: {exc}\n")
            return 2
        _emit(_report("error", {"message": str(exc)}, {"verb": args.verb}))
        return 1
    _emit(report)
    return code


def _is_usage_shaped(exc: WittcError) -> bool:
    """Input-shape problems (unsupported field, unparsable data) are usage
    errors; failures of mathematical preconditions are not."""
    text = str(exc)
    return "characteristic 2" in text or "not a field description" in text or "not prime" in text


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
