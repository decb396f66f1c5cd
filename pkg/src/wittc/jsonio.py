"""JSON encodings of every value the CLI reads or writes.

Fields are "Q" or {"Fp": p}; field elements are decimal strings such as
"3" or "-1/2"; polynomials are {"coeffs": [...]} in ascending degree;
algebra elements are coefficient vectors of length deg(modulus).  Every
encoder emits data that the matching decoder parses back to an equal
value.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra
from .corresp import Correspondence
from .errors import WittcError
from .fields import Field, PrimeField, Rationals
from .poly import Poly
from .quadform import QuadSpace, WittInvariants
from .rigidity import HomotopyPencil, NilpotentSpace


def field_to_json(field: Field):
    if isinstance(field, Rationals):
        return "Q"
    return {"Fp": field.p}


def field_from_json(obj) -> Field:
    if obj == "Q":
        return Rationals()
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return PrimeField(int(obj["Fp"]))
    raise WittcError(f"not a field description: {obj!r}")


def elem_to_json(field: Field, a) -> str:
    return field.elem_to_str(a)


def elem_from_json(field: Field, obj):
    if isinstance(obj, str):
        return field.elem_from_str(obj)
    if isinstance(obj, int):
        return field.coerce(obj)
    raise WittcError(f"not a field element: {obj!r}")


def poly_to_json(f: Poly):
    return {"coeffs": [f.field.elem_to_str(c) for c in f.coeffs]}


def poly_from_json(field: Field, obj) -> Poly:
    if isinstance(obj, dict) and "coeffs" in obj:
        coeffs = obj["coeffs"]
    elif isinstance(obj, list):
        coeffs = obj
    else:
        raise WittcError(f"not a polynomial: {obj!r}")
    return Poly(field, [elem_from_json(field, c) for c in coeffs])


def quadspace_to_json(s: QuadSpace):
    return {
        "field": field_to_json(s.field),
        "gram": [[s.field.elem_to_str(x) for x in row] for row in s.gram],
    }


def quadspace_from_json(obj) -> QuadSpace:
    if not isinstance(obj, dict) or "gram" not in obj:
        raise WittcError(f"not a quadratic space: {obj!r}")
    field = field_from_json(obj.get("field", "Q"))
    gram = [[elem_from_json(field, x) for x in row] for row in obj["gram"]]
    return QuadSpace(field, gram)


def invariants_to_json(inv: WittInvariants):
    out = {"rank": inv.rank, "disc": str(inv.disc)}
    if inv.signature is not None:
        out["signature"] = inv.signature
    if inv.hasse is not None:
        out["hasse"] = {str(k): v for k, v in inv.hasse.items()}
    return out


def algebra_to_json(E: FiniteAlgebra):
    return {
        "field": field_to_json(E.field),
        "modulus": poly_to_json(E.modulus),
    }


def algebra_from_json(obj) -> FiniteAlgebra:
    if not isinstance(obj, dict) or "modulus" not in obj:
        raise WittcError(f"not an algebra description: {obj!r}")
    field = field_from_json(obj.get("field", "Q"))
    return FiniteAlgebra(field, poly_from_json(field, obj["modulus"]))


def alg_elem_to_json(E: FiniteAlgebra, a):
    return [E.field.elem_to_str(x) for x in a]


def alg_elem_from_json(E: FiniteAlgebra, obj):
    if not isinstance(obj, list):
        raise WittcError(f"not an algebra element: {obj!r}")
    return E.from_coeffs([elem_from_json(E.field, x) for x in obj])


def correspondence_to_json(c: Correspondence):
    return {
        "source": algebra_to_json(c.source),
        "target": algebra_to_json(c.target),
        "rank": c.rank,
        "action": [[alg_elem_to_json(c.source, x) for x in row] for row in c.action],
        "gram": [[alg_elem_to_json(c.source, x) for x in row] for row in c.gram],
    }


def correspondence_from_json(obj) -> Correspondence:
    if not isinstance(obj, dict) or "source" not in obj or "target" not in obj:
        raise WittcError(f"not a correspondence: {obj!r}")
    source = algebra_from_json(obj["source"])
    target = algebra_from_json(obj["target"])
    action = [
        [alg_elem_from_json(source, x) for x in row] for row in obj["action"]
    ]
    gram = [[alg_elem_from_json(source, x) for x in row] for row in obj["gram"]]
    c = Correspondence(source, target, action, gram)
    if "rank" in obj and int(obj["rank"]) != c.rank:
        raise WittcError("declared rank does not match the matrices")
    return c


def nilpotent_to_json(s: NilpotentSpace):
    return {
        "field": field_to_json(s.e.field),
        "e": poly_to_json(s.e),
        "n": s.n,
        "gram": quadspace_to_json(s.space)["gram"],
    }


def nilpotent_from_json(obj) -> NilpotentSpace:
    field = field_from_json(obj.get("field", "Q"))
    e = poly_from_json(field, obj["e"])
    n = int(obj["n"])
    gram = [[elem_from_json(field, x) for x in row] for row in obj["gram"]]
    return NilpotentSpace(e, n, QuadSpace(field, gram))


def pencil_to_json(p: HomotopyPencil):
    return {
        "field": field_to_json(p.field),
        "f0": poly_to_json(p.f0),
        "f1": poly_to_json(p.f1),
        "unit": p.field.elem_to_str(p.unit),
    }


def pencil_from_json(obj) -> HomotopyPencil:
    field = field_from_json(obj.get("field", "Q"))
    return HomotopyPencil(
        poly_from_json(field, obj["f0"]),
        poly_from_json(field, obj["f1"]),
        elem_from_json(field, obj.get("unit", "1")),
    )
