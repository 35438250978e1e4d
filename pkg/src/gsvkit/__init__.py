"""Exact local invariants of isolated hypersurface singularities.

The package computes Milnor and Tjurina numbers, verifies tangency of
vector fields, evaluates the GSV index through its homological formulas,
certifies index minimality and weighted homogeneity, and evaluates integer
obstructions to global holomorphic vector fields on projective
hypersurfaces, compact curves and surfaces.  All arithmetic is exact.
"""

from .poly import (
    ANTIGRADED,
    DEGREVLEX,
    MonomialOrder,
    Polynomial,
    default_variable_names,
    evaluate_at_origin,
    format_poly,
    gradient,
    monomial_compare,
    parse_poly,
    weighted_order,
)
from .localstd import (
    INFINITE,
    Ideal,
    MoraResult,
    StandardBasis,
    ideal,
    ideal_membership,
    local_normal_form,
    mora_division,
    quotient_dimension,
    standard_basis,
)
from .germ import GermClass, HypersurfaceGerm, classify_germ, euler_field, milnor_number, tjurina_number
from .field import (
    Cofactor,
    VectorFieldGerm,
    apply_field,
    isolated_zero_dimension,
    nondegenerate_at_origin,
    polynomial_combination,
    tangency_cofactor,
    trivial_tangent_fields,
)
from .gsv import (
    GsvReport,
    MinimalityCertificate,
    SpecialIndices,
    gsv_index,
    min_index_bound,
    minimality_certificate,
    special_index_formulas,
)

__version__ = "0.1.0"

__all__ = [
    "ANTIGRADED",
    "DEGREVLEX",
    "Cofactor",
    "GermClass",
    "GsvReport",
    "HypersurfaceGerm",
    "INFINITE",
    "Ideal",
    "MinimalityCertificate",
    "MonomialOrder",
    "MoraResult",
    "Polynomial",
    "SpecialIndices",
    "StandardBasis",
    "VectorFieldGerm",
    "apply_field",
    "classify_germ",
    "default_variable_names",
    "euler_field",
    "evaluate_at_origin",
    "format_poly",
    "gradient",
    "gsv_index",
    "ideal",
    "ideal_membership",
    "isolated_zero_dimension",
    "local_normal_form",
    "milnor_number",
    "min_index_bound",
    "minimality_certificate",
    "monomial_compare",
    "mora_division",
    "nondegenerate_at_origin",
    "parse_poly",
    "polynomial_combination",
    "quotient_dimension",
    "special_index_formulas",
    "standard_basis",
    "tangency_cofactor",
    "tjurina_number",
    "trivial_tangent_fields",
    "weighted_order",
    "__version__",
]
