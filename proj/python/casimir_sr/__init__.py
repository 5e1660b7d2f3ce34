"""Nonretarded sphere-substrate Casimir interaction in the dipolar spectral
representation: Drude/constant dielectric models, surface-mode spectra,
densities of states, and the zero-point energy and force."""

from ._core import (
    HBARC_EV_NM,
    PICONEWTON_PER_EV_PER_NM,
    BreakdownError,
    ConvergenceError,
    DOSProfile,
    EnergyResult,
    Environment,
    ForceMethod,
    ForceResult,
    Geometry,
    Mat3,
    Material,
    MaterialKind,
    ModeEntry,
    Normalization,
    QuadratureConfig,
    SpectralModes,
    __version__,
    casimir_energy,
    casimir_force,
    contrast_factor,
    default_omega_grid,
    dos_difference,
    dos_omega_direction,
    dos_omega_total,
    dos_u_direction,
    dos_u_total,
    eigenmodes,
    epsilon_at,
    h_matrix,
    interaction_element,
    polarizability,
    retardation_length_nm,
    sharp_limit_energy,
    solve_response,
    spectral_modes,
    spectral_u,
    sphere_preset,
    substrate_preset,
)

__all__ = [
    "HBARC_EV_NM",
    "PICONEWTON_PER_EV_PER_NM",
    "BreakdownError",
    "ConvergenceError",
    "DOSProfile",
    "EnergyResult",
    "Environment",
    "ForceMethod",
    "ForceResult",
    "Geometry",
    "Mat3",
    "Material",
    "MaterialKind",
    "ModeEntry",
    "Normalization",
    "QuadratureConfig",
    "SpectralModes",
    "__version__",
    "casimir_energy",
    "casimir_force",
    "contrast_factor",
    "default_omega_grid",
    "dos_difference",
    "dos_omega_direction",
    "dos_omega_total",
    "dos_u_direction",
    "dos_u_total",
    "eigenmodes",
    "epsilon_at",
    "h_matrix",
    "interaction_element",
    "polarizability",
    "retardation_length_nm",
    "sharp_limit_energy",
    "solve_response",
    "spectral_modes",
    "spectral_u",
    "sphere_preset",
    "substrate_preset",
]
