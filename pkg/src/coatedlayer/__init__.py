"""Surface deflection of a thin bonded elastic layer coated with an elastic membrane.

Asymptotic models (compressible Winkler-type, two-term compressible, and
incompressible shear-governed) for the local indentation of a transversely
isotropic layer bonded to a rigid substrate and reinforced by a thin
membrane, together with an exact per-wavenumber solver of the underlying 3D
elasticity problem used to verify them.
"""

from .fields import (
    PeriodicGrid,
    ScalarField,
    VectorField,
    divergence,
    gradient,
    laplacian,
    load_scalar_binary,
    make_pressure,
    save_scalar_binary,
    save_scalar_csv,
    save_vector_csv,
)
from .material import (
    ElasticConstants,
    MembraneConstants,
    from_isotropic,
    incompressible_limit_ratios,
    reduce_plane_stress,
    stiffness_matrix,
    validate,
    validate_membrane,
)
from .membrane import (
    MembraneSymbol,
    apply_membrane_traction,
    averaged_membrane_stress,
    axisymmetric_traction,
    membrane_symbol,
)
from .models import (
    LayerSystem,
    ModeProfiles,
    TransferRecord,
    incompressible_indentation,
    incompressible_kernel,
    inextensible_kernel,
    interior_profiles,
    solve_membrane_displacement,
    stiffness_ratio,
    two_term_compressible_indentation,
    two_term_kernel,
    uncoated_kernel,
    winkler_indentation,
    winkler_kernel,
)
from .oracle import (
    ConvergenceResult,
    ModeSolution,
    SolverError,
    cheb_lobatto,
    convergence_study,
    incompressible_reference_transfer,
    solve_mode,
    surface_transfer,
)

__version__ = "0.1.0"

__all__ = [
    "ElasticConstants",
    "MembraneConstants",
    "validate",
    "validate_membrane",
    "from_isotropic",
    "reduce_plane_stress",
    "incompressible_limit_ratios",
    "stiffness_matrix",
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
    "MembraneSymbol",
    "membrane_symbol",
    "apply_membrane_traction",
    "axisymmetric_traction",
    "averaged_membrane_stress",
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
    "SolverError",
    "ModeSolution",
    "ConvergenceResult",
    "cheb_lobatto",
    "solve_mode",
    "surface_transfer",
    "incompressible_reference_transfer",
    "convergence_study",
    "__version__",
]
