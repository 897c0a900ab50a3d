"""Periodic grid, sampled fields, spectral differential operators, and test loads.

The unbounded plane is modeled as one periodic cell; accuracy requires the
load to decay well inside the cell (the generators below enforce simple
guards).  All transforms use the real-input convention (rfft2/irfft2).
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "PeriodicGrid",
    "ScalarField",
    "VectorField",
    "gradient",
    "divergence",
    "laplacian",
    "make_pressure",
    "save_scalar_csv",
    "save_vector_csv",
    "save_scalar_binary",
    "load_scalar_binary",
]

BINARY_MAGIC = b"CLFIELD1"  # 8 bytes; header = magic + <i4 n1 + <i4 n2 + <f8 L1 + <f8 L2


@dataclass(frozen=True)
class PeriodicGrid:
    """Uniform periodic grid on [0, L1) x [0, L2) with n1 x n2 nodes.

    Node counts must be even and at least 4 so that wavenumbers
    2*pi*j/L, j in [-n/2, n/2), are well defined with a single Nyquist
    column per axis.
    """

    n1: int
    n2: int
    L1: float
    L2: float

    def __post_init__(self):
        for name, n in (("n1", self.n1), ("n2", self.n2)):
            if n < 4 or n % 2 != 0:
                raise ValueError(f"{name} must be even and >= 4, got {n}")
        for name, L in (("L1", self.L1), ("L2", self.L2)):
            if not (L > 0.0 and np.isfinite(L)):
                raise ValueError(f"{name} must be positive and finite, got {L}")

    @property
    def y1(self) -> np.ndarray:
        return np.arange(self.n1) * (self.L1 / self.n1)

    @property
    def y2(self) -> np.ndarray:
        return np.arange(self.n2) * (self.L2 / self.n2)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.y1, self.y2, indexing="ij")

    @property
    def cell_area(self) -> float:
        return self.L1 * self.L2

    @property
    def node_area(self) -> float:
        return (self.L1 / self.n1) * (self.L2 / self.n2)

    def wavenumbers(self, zero_nyquist: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """Angular wavenumber arrays for rfft2 layout: k1 (n1, 1), k2 (1, n2//2+1).

        With ``zero_nyquist`` the +/-n/2 column is zeroed, as required for
        first-derivative multipliers (the sign of the Nyquist wavenumber is
        ambiguous on a real grid).
        """
        k1 = 2.0 * np.pi * np.fft.fftfreq(self.n1, d=self.L1 / self.n1)
        k2 = 2.0 * np.pi * np.fft.rfftfreq(self.n2, d=self.L2 / self.n2)
        if zero_nyquist:
            k1 = k1.copy()
            k1[self.n1 // 2] = 0.0
            k2 = k2.copy()
            k2[-1] = 0.0
        return k1[:, None], k2[None, :]


def _check_values(grid: PeriodicGrid, values: np.ndarray, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.shape != (grid.n1, grid.n2):
        raise ValueError(
            f"{name} must have shape ({grid.n1}, {grid.n2}), got {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr = arr.copy()
    arr.flags.writeable = False  # fields are immutable once constructed
    return arr


@dataclass(frozen=True)
class ScalarField:
    """Real samples of a scalar quantity on a periodic grid (row-major: [i1, i2])."""

    grid: PeriodicGrid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _check_values(self.grid, self.values, "values"))


@dataclass(frozen=True)
class VectorField:
    """Real samples of an in-plane vector quantity on a periodic grid."""

    grid: PeriodicGrid
    v1: np.ndarray
    v2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v1", _check_values(self.grid, self.v1, "v1"))
        object.__setattr__(self, "v2", _check_values(self.grid, self.v2, "v2"))


def gradient(f: ScalarField) -> VectorField:
    """Spectral gradient; exact per Fourier mode, Nyquist derivative modes zeroed."""
    k1, k2 = f.grid.wavenumbers(zero_nyquist=True)
    fh = np.fft.rfft2(f.values)
    g1 = np.fft.irfft2(1j * k1 * fh, s=f.values.shape)
    g2 = np.fft.irfft2(1j * k2 * fh, s=f.values.shape)
    return VectorField(f.grid, g1, g2)


def divergence(v: VectorField) -> ScalarField:
    """Spectral divergence; exact per Fourier mode, Nyquist derivative modes zeroed."""
    k1, k2 = v.grid.wavenumbers(zero_nyquist=True)
    dh = 1j * k1 * np.fft.rfft2(v.v1) + 1j * k2 * np.fft.rfft2(v.v2)
    return ScalarField(v.grid, np.fft.irfft2(dh, s=v.v1.shape))


def laplacian(f: ScalarField) -> ScalarField:
    """Spectral Laplacian with the full -|xi|^2 multiplier (Nyquist included).

    divergence(gradient(f)) agrees with laplacian(f) to round-off for any
    field with no Nyquist content.
    """
    k1, k2 = f.grid.wavenumbers()
    fh = np.fft.rfft2(f.values)
    return ScalarField(f.grid, np.fft.irfft2(-(k1**2 + k2**2) * fh, s=f.values.shape))


def make_pressure(kind: str, params: dict, grid: PeriodicGrid) -> ScalarField:
    """Generate a test pressure field.

    Kinds and params
    ----------------
    cosine_mode : m1, m2 (integer mode indices), amplitude
        p = amplitude * cos(2*pi*(m1*y1/L1 + m2*y2/L2)); integer indices
        guarantee periodicity on the cell.
    gaussian : center (pair), width, amplitude
        p = amplitude * exp(-r^2 / (2*width^2)) with r the minimal-image
        distance to center.  Requires width < min(L1, L2)/6; the periodic
        image level is exp(-L^2/(8*width^2)) of peak, so choose the width
        accordingly when high accuracy is needed.
    hertz : center (pair), radius, peak
        p = peak * sqrt(max(0, 1 - r^2/radius^2)).  Rejected when
        radius >= min(L1, L2)/2 (the support would wrap around).  The
        square-root cusp at the rim makes spectral convergence of derived
        quantities algebraic, not exponential; refine the grid rather than
        tightening tolerances on a fixed grid.
    """
    Y1, Y2 = grid.mesh()
    if kind == "cosine_mode":
        m1, m2, amp = params["m1"], params["m2"], params["amplitude"]
        if int(m1) != m1 or int(m2) != m2:
            raise ValueError(f"cosine_mode indices must be integers, got ({m1}, {m2})")
        phase = 2.0 * np.pi * (m1 * Y1 / grid.L1 + m2 * Y2 / grid.L2)
        return ScalarField(grid, amp * np.cos(phase))
    if kind == "gaussian":
        c1, c2 = params["center"]
        width, amp = params["width"], params["amplitude"]
        if not (0.0 < width < min(grid.L1, grid.L2) / 6.0):
            raise ValueError(
                f"gaussian width must satisfy 0 < width < min(L1, L2)/6, got {width}"
            )
        r2 = _min_image_r2(Y1 - c1, Y2 - c2, grid)
        return ScalarField(grid, amp * np.exp(-r2 / (2.0 * width**2)))
    if kind == "hertz":
        c1, c2 = params["center"]
        radius, peak = params["radius"], params["peak"]
        if radius >= min(grid.L1, grid.L2) / 2.0:
            raise ValueError(
                f"hertz radius must be < min(L1, L2)/2 to avoid wraparound, got {radius}"
            )
        if radius <= 0.0:
            raise ValueError(f"hertz radius must be positive, got {radius}")
        r2 = _min_image_r2(Y1 - c1, Y2 - c2, grid)
        return ScalarField(grid, peak * np.sqrt(np.maximum(0.0, 1.0 - r2 / radius**2)))
    raise ValueError(f"unknown pressure kind {kind!r}")


def _min_image_r2(d1: np.ndarray, d2: np.ndarray, grid: PeriodicGrid) -> np.ndarray:
    d1 = d1 - grid.L1 * np.round(d1 / grid.L1)
    d2 = d2 - grid.L2 * np.round(d2 / grid.L2)
    return d1**2 + d2**2


# ---------------------------------------------------------------------------
# serialization

def _fmt(x: float) -> str:
    return repr(float(x))


def save_scalar_csv(f: ScalarField, path: str | Path) -> None:
    """Write (y1, y2, value) rows; '.' decimal, comma separator, header row."""
    Y1, Y2 = f.grid.mesh()
    with open(path, "w", newline="\n") as fh:
        fh.write("y1,y2,value\n")
        for a, b, v in zip(Y1.ravel(), Y2.ravel(), f.values.ravel()):
            fh.write(f"{_fmt(a)},{_fmt(b)},{_fmt(v)}\n")


def save_vector_csv(v: VectorField, path: str | Path) -> None:
    """Write (y1, y2, v1, v2) rows."""
    Y1, Y2 = v.grid.mesh()
    with open(path, "w", newline="\n") as fh:
        fh.write("y1,y2,v1,v2\n")
        for a, b, c, d in zip(Y1.ravel(), Y2.ravel(), v.v1.ravel(), v.v2.ravel()):
            fh.write(f"{_fmt(a)},{_fmt(b)},{_fmt(c)},{_fmt(d)}\n")


def save_scalar_binary(f: ScalarField, path: str | Path) -> None:
    """Raw row-major float64 dump with a 32-byte header (magic, n1, n2, L1, L2)."""
    header = BINARY_MAGIC + struct.pack(
        "<iidd", f.grid.n1, f.grid.n2, f.grid.L1, f.grid.L2
    )
    assert len(header) == 32
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(np.ascontiguousarray(f.values, dtype="<f8").tobytes())


def load_scalar_binary(path: str | Path) -> ScalarField:
    with open(path, "rb") as fh:
        header = fh.read(32)
        if len(header) != 32 or header[:8] != BINARY_MAGIC:
            raise ValueError(f"{path}: not a field binary (bad magic)")
        n1, n2, L1, L2 = struct.unpack("<iidd", header[8:])
        values = np.frombuffer(fh.read(), dtype="<f8").reshape(n1, n2)
    return ScalarField(PeriodicGrid(n1, n2, L1, L2), values)
