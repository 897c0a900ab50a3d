"""Transversely isotropic elastic constants and the plane-stress coating reduction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ElasticConstants",
    "MembraneConstants",
    "validate",
    "validate_membrane",
    "from_isotropic",
    "reduce_plane_stress",
    "incompressible_limit_ratios",
    "stiffness_matrix",
]


@dataclass(frozen=True)
class ElasticConstants:
    """The five independent moduli of a transversely isotropic solid, in Pa.

    The symmetry axis is the out-of-plane (z) direction: a11/a12 are the
    in-plane normal/cross moduli, a13 the in-plane/out-of-plane coupling,
    a33 the out-of-plane normal modulus and a44 the out-of-plane shear
    modulus.  The in-plane shear modulus a66 is not independent and is
    always derived.
    """

    a11: float
    a12: float
    a13: float
    a33: float
    a44: float

    @property
    def a66(self) -> float:
        return (self.a11 - self.a12) / 2.0


@dataclass(frozen=True)
class MembraneConstants:
    """Reduced plane-stress in-plane stiffnesses of the coating, plus its thickness.

    b11/b12 are the coating moduli after eliminating the transverse normal
    strain (generalized plane stress); b66 is derived.  hhat is the coating
    thickness in m.
    """

    b11: float
    b12: float
    hhat: float

    @property
    def b66(self) -> float:
        return (self.b11 - self.b12) / 2.0


def stiffness_matrix(c: ElasticConstants) -> np.ndarray:
    """Assemble the 6x6 stiffness matrix in Voigt order (11, 22, 33, 23, 13, 12)."""
    a11, a12, a13, a33, a44, a66 = c.a11, c.a12, c.a13, c.a33, c.a44, c.a66
    return np.array(
        [
            [a11, a12, a13, 0, 0, 0],
            [a12, a11, a13, 0, 0, 0],
            [a13, a13, a33, 0, 0, 0],
            [0, 0, 0, 2 * a44, 0, 0],
            [0, 0, 0, 0, 2 * a44, 0],
            [0, 0, 0, 0, 0, 2 * a66],
        ],
        dtype=float,
    )


def _strictly_greater(lhs: float, rhs: float, rel_slack: float) -> bool:
    # strict inequality with an optional relative margin; slack 0 rejects equality
    return lhs > rhs + rel_slack * max(abs(lhs), abs(rhs))


def validate(c: ElasticConstants, rel_slack: float = 0.0) -> ElasticConstants:
    """Check positive definiteness of the stiffness matrix.

    Parameters
    ----------
    c : ElasticConstants
        Candidate moduli.
    rel_slack : float
        Relative margin each strict inequality must clear; 0 means plain
        strict inequalities, so degenerate (rank-deficient) materials are
        rejected.

    Returns
    -------
    ElasticConstants
        The same constants, unchanged, if admissible.

    Raises
    ------
    ValueError
        Naming the violated inequality.
    """
    vals = (c.a11, c.a12, c.a13, c.a33, c.a44)
    if not all(np.isfinite(vals)):
        raise ValueError(f"elastic constants must be finite, got {vals}")
    if not _strictly_greater(c.a44, 0.0, rel_slack):
        raise ValueError(f"a44 > 0 violated (a44={c.a44})")
    if not _strictly_greater(c.a66, 0.0, rel_slack):
        raise ValueError(f"a66 > 0 violated (a66=(a11-a12)/2={c.a66})")
    if not _strictly_greater(c.a11, abs(c.a12), rel_slack):
        raise ValueError(f"a11 > |a12| violated (a11={c.a11}, a12={c.a12})")
    if not _strictly_greater(c.a33 * (c.a11 + c.a12), 2.0 * c.a13**2, rel_slack):
        raise ValueError(
            "a33*(a11+a12) > 2*a13^2 violated "
            f"(lhs={c.a33 * (c.a11 + c.a12)}, rhs={2.0 * c.a13**2})"
        )
    return c


def validate_membrane(m: MembraneConstants, rel_slack: float = 0.0) -> MembraneConstants:
    """Check that the reduced in-plane stiffness is positive definite."""
    vals = (m.b11, m.b12, m.hhat)
    if not all(np.isfinite(vals)):
        raise ValueError(f"membrane constants must be finite, got {vals}")
    if not _strictly_greater(m.b11, 0.0, rel_slack):
        raise ValueError(f"b11 > 0 violated (b11={m.b11})")
    if not _strictly_greater(m.b11, abs(m.b12), rel_slack):
        raise ValueError(f"b11 > |b12| violated (b11={m.b11}, b12={m.b12})")
    if not (m.hhat > 0.0):
        raise ValueError(f"coating thickness must be positive, got hhat={m.hhat}")
    return m


def from_isotropic(E: float, nu: float) -> ElasticConstants:
    """Build the transversely isotropic constants of an isotropic solid.

    Parameters
    ----------
    E : float
        Young's modulus, Pa; must be positive.
    nu : float
        Poisson's ratio; must lie in (-1, 0.5).  nu == 0.5 is rejected
        because the moduli are unbounded there; use a near-incompressible
        value such as 0.4999 instead.
    """
    if not (E > 0.0):
        raise ValueError(f"Young's modulus must be positive, got E={E}")
    if not (-1.0 < nu < 0.5):
        raise ValueError(
            f"Poisson's ratio must lie in (-1, 0.5), got nu={nu}"
            + ("; use a near-incompressible value < 0.5" if nu == 0.5 else "")
        )
    lam = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu))
    mu = E / (2.0 * (1.0 + nu))
    return ElasticConstants(a11=lam + 2 * mu, a12=lam, a13=lam, a33=lam + 2 * mu, a44=mu)


def reduce_plane_stress(c: ElasticConstants, hhat: float) -> MembraneConstants:
    """Reduce coating moduli to the in-plane plane-stress stiffnesses.

    Eliminating the transverse normal strain under vanishing averaged
    transverse stress gives b11 = a11 - a13^2/a33 and b12 = a12 - a13^2/a33.
    The in-plane shear modulus is unchanged: b11 - b12 == a11 - a12.

    Parameters
    ----------
    c : ElasticConstants
        Validated coating moduli.
    hhat : float
        Coating thickness, m; must be positive.
    """
    validate(c)
    if not (hhat > 0.0):
        raise ValueError(f"coating thickness must be positive, got hhat={hhat}")
    corr = c.a13**2 / c.a33
    return MembraneConstants(b11=c.a11 - corr, b12=c.a12 - corr, hhat=hhat)


def incompressible_limit_ratios(c: ElasticConstants) -> tuple[float, float]:
    """Return (a13/a33, a44/a33).

    These tend to (1, 0) as the material approaches incompressibility;
    callers use them to decide whether the compressible or the
    incompressible surface-deflection model applies.  This module never
    switches branches itself.
    """
    validate(c)
    return c.a13 / c.a33, c.a44 / c.a33
