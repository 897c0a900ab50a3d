"""The coating as a 2x2 matrix boundary operator on the surface displacement.

A stretched membrane bonded to the layer surface transmits shear traction
proportional to second derivatives of the tangential surface displacement.
This module evaluates that operator three ways: as a Fourier symbol, applied
spectrally to sampled fields, and in the axisymmetric radial form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import VectorField
from .material import MembraneConstants

__all__ = [
    "MembraneSymbol",
    "membrane_symbol",
    "apply_membrane_traction",
    "axisymmetric_traction",
    "averaged_membrane_stress",
]


@dataclass(frozen=True)
class MembraneSymbol:
    """Fourier image of the membrane operator at one wavevector.

    The symbol matrix [[m11, m12], [m12, m22]] is symmetric and negative
    semidefinite; its eigenvalues are -hhat*b11*|xi|^2 along xi (stretching)
    and -hhat*b66*|xi|^2 across xi (shearing).
    """

    xi: tuple[float, float]
    m11: float
    m12: float
    m22: float

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m12, self.m22]])


def membrane_symbol(xi: tuple[float, float], m: MembraneConstants) -> MembraneSymbol:
    """Evaluate the operator symbol at wavevector xi (substitute d/dy_a -> i*xi_a)."""
    x1, x2 = xi
    h = m.hhat
    return MembraneSymbol(
        xi=(float(x1), float(x2)),
        m11=-h * (m.b11 * x1**2 + m.b66 * x2**2),
        m22=-h * (m.b11 * x2**2 + m.b66 * x1**2),
        m12=-h * (m.b12 + m.b66) * x1 * x2,
    )


def apply_membrane_traction(v: VectorField, m: MembraneConstants) -> VectorField:
    """Shear traction transmitted to the layer surface by the membrane.

    Computed spectrally: each Fourier mode of the displacement is multiplied
    by minus the symbol matrix, so constants are annihilated exactly and the
    result is real.  Sign convention: the returned field is the traction
    (sigma_31, sigma_32) acting on the layer at the coated surface, i.e. the
    negative of the operator applied to the displacement.
    """
    grid = v.grid
    k1, k2 = grid.wavenumbers()
    h = m.hhat
    s11 = -h * (m.b11 * k1**2 + m.b66 * k2**2)
    s22 = -h * (m.b11 * k2**2 + m.b66 * k1**2)
    s12 = -h * (m.b12 + m.b66) * k1 * k2
    v1h = np.fft.rfft2(v.v1)
    v2h = np.fft.rfft2(v.v2)
    t1 = np.fft.irfft2(-(s11 * v1h + s12 * v2h), s=v.v1.shape)
    t2 = np.fft.irfft2(-(s12 * v1h + s22 * v2h), s=v.v1.shape)
    return VectorField(grid, t1, t2)


def axisymmetric_traction(
    vr: np.ndarray, r: np.ndarray, m: MembraneConstants
) -> np.ndarray:
    """Radial surface traction for an axisymmetric radial displacement profile.

    Evaluates -hhat*b11*(vr'' + vr'/r - vr/r^2) on the given radial grid with
    second-order finite differences (three-point stencils; one-sided at the
    ends).  The grid must be strictly increasing with r[0] > 0 — the operator
    is not evaluated at the axis.
    """
    r = np.asarray(r, dtype=float)
    vr = np.asarray(vr, dtype=float)
    if r.ndim != 1 or r.size < 3:
        raise ValueError(f"radial grid needs at least 3 nodes, got {r.size}")
    if vr.shape != r.shape:
        raise ValueError(f"profile shape {vr.shape} does not match grid {r.shape}")
    if r[0] <= 0.0 or np.any(np.diff(r) <= 0.0):
        raise ValueError("radial grid must be strictly increasing with r[0] > 0")
    d1 = _three_point_derivative(vr, r, order=1)
    d2 = _three_point_derivative(vr, r, order=2)
    return -m.hhat * m.b11 * (d2 + d1 / r - vr / r**2)


def _three_point_derivative(f: np.ndarray, x: np.ndarray, order: int) -> np.ndarray:
    """First or second derivative via 3-point Lagrange stencils (nonuniform ok)."""
    out = np.empty_like(f)
    n = x.size
    for i in range(n):
        j = min(max(i, 1), n - 2)  # stencil center; one-sided at the ends
        x0, x1, x2 = x[j - 1], x[j], x[j + 1]
        t = x[i]
        if order == 1:
            w0 = (2 * t - x1 - x2) / ((x0 - x1) * (x0 - x2))
            w1 = (2 * t - x0 - x2) / ((x1 - x0) * (x1 - x2))
            w2 = (2 * t - x0 - x1) / ((x2 - x0) * (x2 - x1))
        else:
            w0 = 2.0 / ((x0 - x1) * (x0 - x2))
            w1 = 2.0 / ((x1 - x0) * (x1 - x2))
            w2 = 2.0 / ((x2 - x0) * (x2 - x1))
        out[i] = w0 * f[j - 1] + w1 * f[j] + w2 * f[j + 1]
    return out


def averaged_membrane_stress(e11, e22, e12, m: MembraneConstants):
    """Thickness-averaged in-plane coating stress from in-plane strain.

    Returns (s11, s22, s12) = (b11*e11 + b12*e22, b12*e11 + b11*e22,
    2*b66*e12); accepts scalars or broadcastable arrays.
    """
    s11 = m.b11 * np.asarray(e11) + m.b12 * np.asarray(e22)
    s22 = m.b12 * np.asarray(e11) + m.b11 * np.asarray(e22)
    s12 = 2.0 * m.b66 * np.asarray(e12)
    return s11, s22, s12
