"""Asymptotic surface-deflection models for a thin coated layer bonded to a rigid base.

All models give the local indentation w0(y) = w(y, 0), the normal surface
displacement under a prescribed pressure p(y), for a layer that is thin
relative to the load's length scale.  Two branches exist and the caller picks
one explicitly (see ``incompressible_limit_ratios`` for guidance; nothing
here auto-switches):

* compressible: w0 = (h/a33)*p at leading order (a Winkler foundation with
  modulus a33/h); the two-term refinement adds the O((h*k)^2) correction.
* incompressible: the leading term degenerates and the response is governed
  by out-of-plane shear, w0 = -h^3/(12*a44)*lap(p) + (h/2)*div(v0), where the
  surface tangential displacement v0 solves the membrane-screened equation
  h*L(grad)v0 - a44*v0 = (h^2/2)*grad(p).

Derivation note (scaling): the interior expansion is carried out in stretched
coordinates — in-plane lengths measured by the load scale h* = 1/k, depth by
the layer thickness h — and proceeds in powers of eps = h*k.  The normal
displacement expands in odd powers (eps*W0 + eps^3*W2 + ...), the tangential
one in even powers (eps^2*V1 + ...).  Undoing the scaling converts each
in-plane derivative into a factor h* and each expansion order into a factor
eps, which collapses every surviving term into the pure h-powers used below:
eps*(h*/a33) -> h/a33, eps^3*h**(in-plane Laplacian) -> h^3*lap,
eps^3*h**(in-plane divergence of V1) -> h^3*div with v0 = eps^2*V1.  The
membrane equation for V1 contracts the same way into the v0 equation above,
with the general pressure-gradient coefficient (a13-a44)/(2*a33) in the
compressible branch and its incompressible limit 1/2.

Single-mode transfer kernels (deflection amplitude per unit pressure
amplitude at wavenumber k) follow by substituting one Fourier mode; the
dimensionless coating drag s = h*hhat*b11*k^2/a44 controls the interpolation
between the uncoated (s=0) and inextensible-coating (s->inf) limits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import ScalarField, VectorField, divergence, gradient, laplacian
from .material import (
    ElasticConstants,
    MembraneConstants,
    validate,
    validate_membrane,
)

__all__ = [
    "LayerSystem",
    "TransferRecord",
    "ModeProfiles",
    "stiffness_ratio",
    "winkler_indentation",
    "solve_membrane_displacement",
    "incompressible_indentation",
    "two_term_compressible_indentation",
    "winkler_kernel",
    "incompressible_kernel",
    "two_term_kernel",
    "uncoated_kernel",
    "inextensible_kernel",
    "interior_profiles",
]


@dataclass(frozen=True)
class LayerSystem:
    """Full physical configuration: layer thickness and constants, plus coating.

    ``membrane=None`` with ``inextensible_coating=False`` is the uncoated
    case (all operations treat it as a zero-stiffness membrane, so the
    formulas degenerate smoothly); ``inextensible_coating=True`` selects the
    analytic rigid-coating limit instead of a huge stiffness number.  The
    models assume the coating is much thinner than the layer (hhat << h);
    this is not enforced.
    """

    h: float
    layer: ElasticConstants
    membrane: MembraneConstants | None = None
    inextensible_coating: bool = False

    def __post_init__(self):
        if not (self.h > 0.0 and np.isfinite(self.h)):
            raise ValueError(f"layer thickness must be positive and finite, got {self.h}")
        validate(self.layer)
        if self.membrane is not None:
            validate_membrane(self.membrane)
            if self.inextensible_coating:
                raise ValueError(
                    "inextensible_coating replaces the membrane; pass membrane=None"
                )

    @property
    def membrane_stiffness(self) -> float:
        """hhat*b11, the tensile stiffness the coating opposes to stretching (Pa*m)."""
        return 0.0 if self.membrane is None else self.membrane.hhat * self.membrane.b11


@dataclass(frozen=True)
class TransferRecord:
    """One wavenumber of a model-vs-reference comparison."""

    k: float
    epsilon: float
    model_w: float
    oracle_w: float | None = None

    def __post_init__(self):
        if self.k < 0.0 or not np.isfinite(self.model_w):
            raise ValueError(f"bad record: k={self.k}, model_w={self.model_w}")

    @property
    def rel_error(self) -> float | None:
        if self.oracle_w is None:
            return None
        return abs(self.model_w - self.oracle_w) / abs(self.oracle_w)


def stiffness_ratio(k: float, sys: LayerSystem) -> float:
    """Coating drag s = h*hhat*b11*k^2/a44 (0 uncoated, inf inextensible)."""
    if sys.inextensible_coating:
        return np.inf
    return sys.h * sys.membrane_stiffness * k**2 / sys.layer.a44


# ---------------------------------------------------------------------------
# field-level models

def winkler_indentation(p: ScalarField, sys: LayerSystem) -> ScalarField:
    """Compressible leading-order deflection: pointwise (h/a33)*p.

    The coating does not enter at this order; membrane constants are ignored.
    """
    return ScalarField(p.grid, (sys.h / sys.layer.a33) * p.values)


def solve_membrane_displacement(
    p: ScalarField, sys: LayerSystem, coefficient: float | None = None
) -> VectorField:
    """Surface tangential displacement v0 driven by the pressure gradient.

    Solves h*L(grad)v0 - a44*v0 = c*h^2*grad(p) per Fourier mode on the
    periodic cell.  The right-hand side is parallel to the wavevector, which
    is an eigenvector of the membrane symbol, so each mode inverts in closed
    form:

        v0_hat = -c*h^2*(i*xi)*p_hat / (h*hhat*b11*|xi|^2 + a44)

    The mean mode maps to zero.  ``coefficient=None`` uses the general
    compressible value c = (a13-a44)/(2*a33); the incompressible model passes
    c = 1/2.  An inextensible coating pins the surface: the result is zero.
    """
    grid = p.grid
    if sys.inextensible_coating:
        z = np.zeros((grid.n1, grid.n2))
        return VectorField(grid, z, z)
    a = sys.layer
    if not (a.a44 > 0.0):
        raise ValueError(f"a44 must be positive, got {a.a44}")
    c = (a.a13 - a.a44) / (2.0 * a.a33) if coefficient is None else coefficient
    k1, k2 = grid.wavenumbers(zero_nyquist=True)
    k1f, k2f = grid.wavenumbers()
    ph = np.fft.rfft2(p.values)
    denom = sys.h * sys.membrane_stiffness * (k1f**2 + k2f**2) + a.a44
    scale = -c * sys.h**2 / denom
    v1 = np.fft.irfft2(scale * 1j * k1 * ph, s=p.values.shape)
    v2 = np.fft.irfft2(scale * 1j * k2 * ph, s=p.values.shape)
    return VectorField(grid, v1, v2)


def incompressible_indentation(p: ScalarField, sys: LayerSystem) -> ScalarField:
    """Deflection of an incompressible layer: shear-governed h^3 model.

    w0 = -h^3/(12*a44)*lap(p) + (h/2)*div(v0) with v0 from
    ``solve_membrane_displacement`` at coefficient 1/2.
    """
    h, a44 = sys.h, sys.layer.a44
    v0 = solve_membrane_displacement(p, sys, coefficient=0.5)
    w = -(h**3 / (12.0 * a44)) * laplacian(p).values + (h / 2.0) * divergence(v0).values
    return ScalarField(p.grid, w)


def two_term_compressible_indentation(p: ScalarField, sys: LayerSystem) -> ScalarField:
    """Compressible deflection including the O((h*k)^2) correction.

    w0 = (h/a33)*p - ((a13+a44)^2 - 4*a44^2) * h^3/(12*a33^2*a44) * lap(p)
         + (a13-a44)/(2*a33) * h * div(v0)

    with v0 from ``solve_membrane_displacement`` at the general coefficient.
    Termwise, the incompressible limit (a13 -> a33, a44/a33 -> 0) recovers
    ``incompressible_indentation``.
    """
    a = sys.layer
    h = sys.h
    c = (a.a13 - a.a44) / (2.0 * a.a33)
    v0 = solve_membrane_displacement(p, sys)
    w = (
        (h / a.a33) * p.values
        - ((a.a13 + a.a44) ** 2 - 4.0 * a.a44**2)
        * (h**3 / (12.0 * a.a33**2 * a.a44))
        * laplacian(p).values
        + c * h * divergence(v0).values
    )
    return ScalarField(p.grid, w)


# ---------------------------------------------------------------------------
# single-mode transfer kernels (m/Pa)

def winkler_kernel(k: float, sys: LayerSystem) -> float:
    """Compressible leading-order transfer h/a33 (independent of k)."""
    return sys.h / sys.layer.a33


def incompressible_kernel(k: float, sys: LayerSystem) -> float:
    """General incompressible transfer: (h^3*k^2/a44) * (1/12 + 1/(4*(1+s)))."""
    h, a44 = sys.h, sys.layer.a44
    s = stiffness_ratio(k, sys)
    coef = 1.0 / 12.0 if np.isinf(s) else 1.0 / 12.0 + 1.0 / (4.0 * (1.0 + s))
    return h**3 * k**2 / a44 * coef


def two_term_kernel(k: float, sys: LayerSystem) -> float:
    """Compressible two-term transfer at wavenumber k."""
    a = sys.layer
    h = sys.h
    c = (a.a13 - a.a44) / (2.0 * a.a33)
    s = stiffness_ratio(k, sys)
    coated = 0.0 if np.isinf(s) else c**2 / (1.0 + s)
    bulk = ((a.a13 + a.a44) ** 2 - 4.0 * a.a44**2) / (12.0 * a.a33**2)
    return h / a.a33 + h**3 * k**2 / a.a44 * (bulk + coated)


def uncoated_kernel(k: float, sys: LayerSystem) -> float:
    """Incompressible transfer without coating: h^3*k^2/(3*a44)."""
    return sys.h**3 * k**2 / (3.0 * sys.layer.a44)


def inextensible_kernel(k: float, sys: LayerSystem) -> float:
    """Incompressible transfer under a rigid (inextensible) coating: h^3*k^2/(12*a44).

    Exactly one quarter of ``uncoated_kernel`` at every k > 0: pinning the
    surface tangentially cuts the shear compliance of the bonded layer by
    four.
    """
    return sys.h**3 * k**2 / (12.0 * sys.layer.a44)


# ---------------------------------------------------------------------------
# through-thickness profiles of one surface mode

@dataclass(frozen=True)
class ModeProfiles:
    """Expansion-term profiles across the layer for one pressure mode.

    For p(y) = cos(xi . y) with |xi| = k, the stretched-coordinate terms are
    sampled on ``zeta`` (relative depth: 0 = coated surface, 1 = bonded
    base).  ``w_leading`` and ``w_correction`` multiply cos(xi . y);
    ``v_tangential`` multiplies sin(xi . y) along xi/|xi|.  The physical
    displacements are recovered as

        w(y, z) ~ eps*w_leading(z/h)*cos + eps^3*w_correction(z/h)*cos
        v(y, z) ~ eps^2*v_tangential(z/h)*sin

    with eps = h*k and the load length scale h* = 1/k.
    """

    zeta: np.ndarray
    w_leading: np.ndarray
    v_tangential: np.ndarray
    w_correction: np.ndarray
    tangential_amplitude: float  # v_tangential at the surface
    h_star: float


def interior_profiles(zeta, k: float, sys: LayerSystem) -> ModeProfiles:
    """Closed-form through-thickness profiles for a unit pressure mode.

    All three profiles vanish at the bonded base (zeta = 1); the leading
    deflection is linear, the tangential profile quadratic, and the
    deflection correction cubic in depth, with coefficients fixed by the
    surface flux conditions.
    """
    zeta = np.asarray(zeta, dtype=float)
    if np.any(zeta < 0.0) or np.any(zeta > 1.0):
        raise ValueError("zeta samples must lie in [0, 1]")
    if not (k > 0.0):
        raise ValueError(f"mode wavenumber must be positive, got {k}")
    a = sys.layer
    a13, a33, a44 = a.a13, a.a33, a.a44
    h_star = 1.0 / k
    s = stiffness_ratio(k, sys)
    if np.isinf(s):
        v_surface = 0.0
    else:
        v_surface = (a13 - a44) * h_star / (2.0 * a33 * a44 * (1.0 + s))

    w_leading = (h_star / a33) * (1.0 - zeta)
    v_tangential = (
        (a13 + a44) / (2.0 * a33 * a44) * zeta * (1.0 - zeta) * h_star
        + (1.0 - zeta) * v_surface
    )
    c2 = -a44 * h_star / (2.0 * a33**2) - (a44 / a33) * v_surface
    w_correction = (
        ((a13 + a44) ** 2 * (2 * zeta**3 - 3 * zeta**2 + 1) + 2 * a44**2 * (1 - zeta) ** 3)
        * h_star
        / (12.0 * a33**2 * a44)
        + (a13 + a44) / (2.0 * a33) * (1.0 - zeta) ** 2 * v_surface
        + c2 * (1.0 - zeta)
    )
    return ModeProfiles(
        zeta=zeta,
        w_leading=w_leading,
        v_tangential=v_tangential,
        w_correction=w_correction,
        tangential_amplitude=v_surface,
        h_star=h_star,
    )
