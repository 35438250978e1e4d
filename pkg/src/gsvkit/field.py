"""Vector-field germs tangent to a hypersurface germ.

An ambient representative of a field on V = {f = 0} is a tuple of
polynomial components (v_1, ..., v_{n+1}).  Tangency means v(f) = k * f for
some germ k, the cofactor; division by f in the local ring may introduce a
unit denominator, so cofactors are stored as (numerator, unit) pairs with

    unit * v(f) == numerator * f          exactly, unit(0) != 0.

Only the trivial tangent family is ever constructed: the fields f * e_i
(cofactor df/dz_i) and the Hamiltonian fields (df/dz_j) e_i - (df/dz_i) e_j
(cofactor 0).  Arbitrary candidate fields are accepted as input and
verified, never searched for.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FieldDoesNotVanishError, NotTangentError
from .germ import HypersurfaceGerm
from .localstd import MonomialOrder, ideal, mora_division, quotient_dimension
from .poly import Polynomial, Rational, gradient


class VectorFieldGerm:
    """Ambient polynomial representative of a vector-field germ."""

    __slots__ = ("components", "_vanishes")

    def __init__(self, components: Sequence[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a vector field needs at least one component")
        nv = comps[0].nvars
        if any(c.nvars != nv for c in comps):
            raise ValueError("components live in different polynomial rings")
        if len(comps) != nv:
            raise ValueError(f"{nv} variables but {len(comps)} components")
        self.components = comps
        self._vanishes = all(not c.constant_term() for c in comps)

    @property
    def nvars(self) -> int:
        return len(self.components)

    @property
    def vanishes_at_origin(self) -> bool:
        return self._vanishes

    def scaled(self, factor: Rational) -> "VectorFieldGerm":
        c = Fraction(factor)
        return VectorFieldGerm(tuple(comp * c for comp in self.components))

    def __add__(self, other: "VectorFieldGerm") -> "VectorFieldGerm":
        if not isinstance(other, VectorFieldGerm):
            return NotImplemented
        return VectorFieldGerm(tuple(a + b for a, b in zip(self.components, other.components)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorFieldGerm):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"VectorFieldGerm({list(self.components)!r})"


def polynomial_combination(
    pairs: Iterable[tuple[Polynomial, VectorFieldGerm]],
) -> VectorFieldGerm:
    """sum p_i * v_i; tangent fields are closed under such combinations."""
    total = None
    for coeff, field in pairs:
        scaled = VectorFieldGerm(tuple(coeff * c for c in field.components))
        total = scaled if total is None else total + scaled
    if total is None:
        raise ValueError("empty combination")
    return total


def apply_field(v: VectorFieldGerm, p: Polynomial) -> Polynomial:
    """Directional derivative sum_i v_i * dp/dz_i."""
    if p.nvars != v.nvars:
        raise ValueError("field and polynomial live in different rings")
    total = Polynomial.zero(p.nvars)
    for i, comp in enumerate(v.components):
        if comp.is_zero():
            continue
        total = total + comp * p.partial_derivative(i)
    return total


@dataclass(frozen=True)
class Cofactor:
    """Tangency cofactor k = numerator / unit with unit(0) != 0."""

    numerator: Polynomial
    unit: Polynomial

    def equivalent(self, other: "Cofactor") -> bool:
        return self.numerator * other.unit == other.numerator * self.unit


def tangency_cofactor(
    v: VectorFieldGerm,
    g: HypersurfaceGerm,
    order: MonomialOrder | None = None,
) -> Cofactor:
    """Cofactor k with v(f) = k * f, via local division with quotient
    tracking; raises NotTangentError (carrying the remainder) otherwise."""
    derivative = apply_field(v, g.f)
    division = mora_division(derivative, [g.f], order)
    if not division.remainder.is_zero():
        raise NotTangentError(
            "v(f) does not lie in <f>: the field is not tangent to the germ",
            remainder=division.remainder,
        )
    return Cofactor(numerator=division.quotients[0], unit=division.unit)


def trivial_tangent_fields(g: HypersurfaceGerm) -> list[VectorFieldGerm]:
    """The f * e_i fields followed by the Hamiltonian fields h_ij, i < j.

    Every returned field is tangent: f * e_i has cofactor df/dz_i and h_ij
    annihilates f outright.
    """
    nv = g.nvars
    grads = gradient(g.f)
    zero = Polynomial.zero(nv)
    fields: list[VectorFieldGerm] = []
    for i in range(nv):
        comps = [zero] * nv
        comps[i] = g.f
        fields.append(VectorFieldGerm(comps))
    for i in range(nv):
        for j in range(i + 1, nv):
            comps = [zero] * nv
            comps[i] = grads[j]
            comps[j] = -grads[i]
            fields.append(VectorFieldGerm(comps))
    return fields


def linear_part(v: VectorFieldGerm) -> list[list[Fraction]]:
    """Matrix of first-order coefficients [dv_i/dz_j at 0]."""
    nv = v.nvars
    unit_exps = []
    for j in range(nv):
        e = [0] * nv
        e[j] = 1
        unit_exps.append(tuple(e))
    return [
        [comp.terms.get(unit_exps[j], Fraction(0)) for j in range(nv)]
        for comp in v.components
    ]


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Fraction-exact determinant by Gaussian elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def nondegenerate_at_origin(v: VectorFieldGerm) -> bool:
    """True iff the linearization of v at the origin is invertible."""
    if not v.vanishes_at_origin:
        raise FieldDoesNotVanishError("the field does not vanish at the origin")
    return _det(linear_part(v)) != 0


def isolated_zero_dimension(v: VectorFieldGerm, order: MonomialOrder | None = None):
    """dim O / <v_1, ..., v_{n+1}>, the intersection number of the
    components; finite exactly when the zero of v at the origin is
    isolated."""
    if not v.vanishes_at_origin:
        raise FieldDoesNotVanishError("the field does not vanish at the origin")
    if all(c.is_zero() for c in v.components):
        from .localstd import INFINITE

        return INFINITE
    return quotient_dimension(ideal(v.components, nvars=v.nvars), order)
