"""GSV index of a tangent vector field via the homological formulas.

For an isolated hypersurface singularity {f = 0} in n+1 variables and a
tangent field with ambient representative v = (v_1, ..., v_{n+1}) vanishing
at the origin, the index is computed by parity of n = dim V:

    odd n:   Ind = dim O/<f, v_1, ..., v_{n+1}> - tau
    even n:  Ind = dim O/<v_1, ..., v_{n+1}>
                   - dim O/<k, v_1, ..., v_{n+1}> + tau

where k is the tangency cofactor (its polynomial numerator generates the
same ideal, since the unit denominator is invertible locally).  The index
is bounded below by 1 + (-1)^n tau, with equality exactly when the ambient
representative has a nondegenerate singular point at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalInconsistencyError,
    NonIsolatedGermError,
    NonIsolatedRestrictionError,
    SmoothGermError,
    UnsupportedDimensionError,
)
from .field import VectorFieldGerm, nondegenerate_at_origin, tangency_cofactor
from .germ import HypersurfaceGerm, milnor_number, tjurina_number
from .localstd import INFINITE, MonomialOrder, ideal, quotient_dimension
from .errors import FieldDoesNotVanishError


@dataclass(frozen=True)
class GsvReport:
    """Full audit record of one index evaluation.

    ``dims`` holds every quotient dimension that entered the formula, keyed
    by the ideal it measures.
    """

    index: int
    bound: int
    mu: int
    tau: int
    parity: str  # "odd" | "even"
    minimal: bool
    nondegenerate_extension: bool
    weighted_homogeneous_equiv: bool
    dims: dict[str, int]
    cofactor_numerator: object  # Polynomial
    cofactor_unit: object  # Polynomial


def _require_isolated(g: HypersurfaceGerm) -> tuple[int, int]:
    mu = milnor_number(g)
    if mu == INFINITE:
        raise NonIsolatedGermError("the singularity of the germ is not isolated")
    if mu == 0:
        raise SmoothGermError("the germ is smooth at the origin")
    return mu, tjurina_number(g)


def min_index_bound(g: HypersurfaceGerm) -> int:
    """The sharp lower bound 1 + (-1)^n tau for indices of tangent fields."""
    _, tau = _require_isolated(g)
    return 1 + (-1) ** g.n * tau


def gsv_index(
    v: VectorFieldGerm,
    g: HypersurfaceGerm,
    order: MonomialOrder | None = None,
) -> GsvReport:
    """Evaluate the index of v on g and assemble the audit report.

    Preconditions: the germ has an isolated singularity (0 < mu < INFINITE),
    the field vanishes at the origin and is tangent, and the quotient
    dimension required by the parity formula is finite.
    """
    if g.nvars < 2:
        raise UnsupportedDimensionError("index formulas require at least two variables")
    if v.nvars != g.nvars:
        raise ValueError("field and germ live in different rings")
    mu, tau = _require_isolated(g)
    if not v.vanishes_at_origin:
        raise FieldDoesNotVanishError("the field does not vanish at the origin")
    cof = tangency_cofactor(v, g, order)
    n = g.n
    dims: dict[str, int] = {}
    if n % 2 == 1:
        dim_fv = quotient_dimension(ideal((g.f, *v.components), nvars=g.nvars), order)
        if dim_fv == INFINITE:
            raise NonIsolatedRestrictionError(
                "dim O/<f, v> is infinite: the restriction has no isolated zero"
            )
        dims["f_and_components"] = dim_fv
        index = dim_fv - tau
        parity = "odd"
    else:
        dim_v = quotient_dimension(ideal(v.components, nvars=g.nvars), order)
        if dim_v == INFINITE:
            raise NonIsolatedRestrictionError(
                "dim O/<v> is infinite: the ambient zero of v is not isolated"
            )
        dim_kv = quotient_dimension(
            ideal((cof.numerator, *v.components), nvars=g.nvars), order
        )
        dims["components"] = dim_v
        dims["cofactor_and_components"] = dim_kv
        index = dim_v - dim_kv + tau
        parity = "even"
    bound = 1 + (-1) ** n * tau
    return GsvReport(
        index=index,
        bound=bound,
        mu=mu,
        tau=tau,
        parity=parity,
        minimal=(index == bound),
        nondegenerate_extension=nondegenerate_at_origin(v),
        weighted_homogeneous_equiv=(mu == tau),
        dims=dims,
        cofactor_numerator=cof.numerator,
        cofactor_unit=cof.unit,
    )


@dataclass(frozen=True)
class MinimalityCertificate:
    index_minimal: bool
    extension_nondegenerate: bool
    consistent: bool


def minimality_certificate(
    v: VectorFieldGerm,
    g: HypersurfaceGerm,
    order: MonomialOrder | None = None,
    *,
    strict: bool = False,
) -> MinimalityCertificate:
    """Check index minimality against nondegeneracy of the extension.

    The two sides are computed independently and must agree on every valid
    input; with ``strict`` a disagreement (an implementation bug, never a
    property of the data) raises InternalInconsistencyError.
    """
    report = gsv_index(v, g, order)
    minimal = report.index == report.bound
    nondeg = nondegenerate_at_origin(v)
    consistent = minimal == nondeg
    if strict and not consistent:
        raise InternalInconsistencyError(
            f"index minimality ({minimal}) disagrees with nondegeneracy ({nondeg})"
        )
    return MinimalityCertificate(
        index_minimal=minimal, extension_nondegenerate=nondeg, consistent=consistent
    )


@dataclass(frozen=True)
class SpecialIndices:
    """Reference values not tied to a concrete field."""

    radial_index: int  # 1 + (-1)^n mu: the radial field on a homogeneous germ
    transversal_index: int  # 1 - mu: fields everywhere transversal to the link


def special_index_formulas(g: HypersurfaceGerm) -> SpecialIndices:
    mu = milnor_number(g)
    if mu == INFINITE:
        raise NonIsolatedGermError("the singularity of the germ is not isolated")
    return SpecialIndices(radial_index=1 + (-1) ** g.n * mu, transversal_index=1 - mu)
