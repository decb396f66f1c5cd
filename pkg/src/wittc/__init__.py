"""Exact quadratic-form and Witt-class computation over Q and GF(p),
with zero-dimensional correspondences, transfers from polynomials, and
the lagrangian/homotopy reduction lemmas.  The CLI entry point is
``wittc``.
"""

from .algebra import FiniteAlgebra, point_algebra
from .corresp import (
    Correspondence,
    compose,
    dual,
    dual_compose_witness,
    ensure_valid,
    graph,
    identity,
    point_projection,
    twist,
    twist_square_isometry,
    underlying_form,
    validate,
)
from .errors import (
    CompositionError,
    DegenerateFormError,
    FieldMismatchError,
    NonUnitError,
    ValidationError,
    WittcError,
)
from .euler import (
    EulerDatum,
    SplitResult,
    bezout_matrix,
    bezoutian_form,
    euler_correspondence,
    plain_trace_form,
    scaled_trace_form,
    split_by_factors,
)
from .fields import Field, PrimeField, Rationals, elem_is_square
from .poly import (
    Poly,
    parse_poly,
    poly_derivative,
    poly_divmod,
    poly_ext_gcd,
    poly_gcd,
    poly_to_str,
)
from .quadform import (
    DiagForm,
    QuadSpace,
    WittInvariants,
    diag_space,
    diagonalize,
    hilbert_symbol,
    is_witt_trivial,
    orthogonal_sum,
    witt_equal,
    witt_invariants,
)
from .rigidity import (
    HomotopyPencil,
    NilpotentSpace,
    PencilReport,
    SqmetResult,
    default_samples,
    ideal_orthogonal,
    lagrangian_split,
    pencil_check,
    sqmet_class,
    square_unit_is_identity,
    sublagrangian_reduce,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
