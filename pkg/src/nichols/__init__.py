"""Weyl groupoids and root systems of Nichols algebras of diagonal type."""

from .braiding import BraidingMatrix, cartan_entry, is_cartan_type, parse, serialize
from .cartan import (
    FiniteTypeReport,
    is_finite_type,
    is_symmetrizable,
    matrix_order,
    root_system,
    sign_coherent_set,
    trace_3cycle,
    weyl_group,
)
from .errors import (
    AmbiguousFactorization,
    CapExceeded,
    ContextMismatch,
    MixedSignRoot,
    NegativeDiscrepancy,
    NicholsError,
    NotA3Cycle,
    NotFiniteType,
    NotInvertible,
    NotReflectable,
    ParseError,
)
from .groupoid import (
    Caps,
    Groupoid,
    RootSet,
    basis_orbit,
    build_groupoid,
    check_brandt_axioms,
    export_dot,
    real_roots,
    weyl_brandt_elements,
)
from .reflection import m_coefficient, pseudo_reflection, reflect_braiding
from .scalar import CycloRational, LaurentScalar, ScalarContext, UnitMonomial, embed

__all__ = [
    "AmbiguousFactorization",
    "BraidingMatrix",
    "CapExceeded",
    "Caps",
    "ContextMismatch",
    "CycloRational",
    "FiniteTypeReport",
    "Groupoid",
    "LaurentScalar",
    "MixedSignRoot",
    "NegativeDiscrepancy",
    "NicholsError",
    "NotA3Cycle",
    "NotFiniteType",
    "NotInvertible",
    "NotReflectable",
    "ParseError",
    "RootSet",
    "ScalarContext",
    "UnitMonomial",
    "basis_orbit",
    "build_groupoid",
    "cartan_entry",
    "check_brandt_axioms",
    "embed",
    "export_dot",
    "is_cartan_type",
    "is_finite_type",
    "is_symmetrizable",
    "m_coefficient",
    "matrix_order",
    "parse",
    "pseudo_reflection",
    "real_roots",
    "reflect_braiding",
    "root_system",
    "serialize",
    "sign_coherent_set",
    "trace_3cycle",
    "weyl_brandt_elements",
    "weyl_group",
]
