"""Hypersurface-germ invariants: Milnor number, Tjurina number, classes.

A germ (V, 0) = {f = 0} with f(0) = 0 carries two fundamental local
invariants,

    mu  = dim O / <df/dz_1, ..., df/dz_{n+1}>       (Milnor number)
    tau = dim O / <f, df/dz_1, ..., df/dz_{n+1}>    (Tjurina number)

computed here as staircase counts of local standard bases.  The singularity
is isolated exactly when mu is finite, the germ is smooth exactly when
mu = 0, and mu = tau characterizes germs analytically equivalent to a
weighted homogeneous polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotQuasiHomogeneousError
from .localstd import INFINITE, MonomialOrder, ideal, quotient_dimension
from .poly import Polynomial, Rational, gradient


class HypersurfaceGerm:
    """The germ at the origin of the hypersurface {f = 0}, f(0) = 0.

    ``n`` is the dimension of V, one less than the number of variables.
    Milnor and Tjurina numbers are cached write-once per order.
    """

    __slots__ = ("f", "order", "_mu", "_tau")

    def __init__(self, f: Polynomial, order: MonomialOrder | None = None):
        if f.constant_term():
            raise ValueError("the defining polynomial must vanish at the origin")
        self.f = f
        self.order = order
        self._mu = None
        self._tau = None

    @property
    def nvars(self) -> int:
        return self.f.nvars

    @property
    def n(self) -> int:
        return self.f.nvars - 1

    def jacobian_ideal(self):
        return ideal(gradient(self.f), nvars=self.f.nvars)

    def tjurina_ideal(self):
        return ideal((self.f, *gradient(self.f)), nvars=self.f.nvars)

    def __repr__(self) -> str:
        return f"HypersurfaceGerm({self.f!r})"


def milnor_number(g: HypersurfaceGerm):
    """dim O / J(f); zero iff smooth, INFINITE iff the singularity is not
    isolated."""
    if g._mu is None:
        g._mu = quotient_dimension(g.jacobian_ideal(), g.order)
    return g._mu


def tjurina_number(g: HypersurfaceGerm):
    """dim O / <f, J(f)>; never exceeds the Milnor number when both are
    finite."""
    if g._tau is None:
        g._tau = quotient_dimension(g.tjurina_ideal(), g.order)
    return g._tau


@dataclass(frozen=True)
class GermClass:
    smooth: bool
    isolated_singularity: bool
    weighted_homogeneous_equiv: bool | None  # None when not isolated


def classify_germ(g: HypersurfaceGerm) -> GermClass:
    """Smoothness, isolatedness and the mu = tau weighted-homogeneity test.

    Weighted homogeneity is meant in the analytic-equivalence sense and is
    reported only for isolated singularities.
    """
    mu = milnor_number(g)
    isolated = mu != INFINITE
    wh = (mu == tjurina_number(g)) if isolated else None
    return GermClass(smooth=(mu == 0), isolated_singularity=isolated, weighted_homogeneous_equiv=wh)


def euler_field(g: HypersurfaceGerm, weights: Sequence[Rational]):
    """The weighted radial field E = (w_1 z_1, ..., w_{n+1} z_{n+1}),
    accepted only when E(f) = f holds exactly.

    For a quasi-homogeneous f with normalized weights this is the field
    generated by the natural C*-action.
    """
    from .field import VectorFieldGerm, apply_field

    nv = g.nvars
    if len(weights) != nv:
        raise ValueError(f"expected {nv} weights, got {len(weights)}")
    ws = [Fraction(w) for w in weights]
    if any(w <= 0 for w in ws):
        raise ValueError("weights must be positive")
    components = tuple(Polynomial.variable(nv, i) * ws[i] for i in range(nv))
    field = VectorFieldGerm(components)
    if apply_field(field, g.f) != g.f:
        raise NotQuasiHomogeneousError(
            "E(f) != f for these weights: f is not quasi-homogeneous of degree 1 for them"
        )
    return field
