"""Bergman and Szego kernels, Green's functions, Robin constants and
minimal-domain classification on planar domains, plus the model Reinhardt
domain in C^2."""

from ._core import (
    PlanarDomain,
    OrthonormalBasis,
    SzegoSolution,
    area_moment,
    bergman_szego_fit,
    build_basis,
    classify,
    f_field_mean,
    green,
    laurent_norm,
    reinhardt,
    reinhardt_radial_integral,
    robin,
    robin_extrapolated,
    sublevel_profile,
    suita_margin,
    szego_kernel,
    szego_zero_count,
    transformation_residual,
)

__all__ = [
    "PlanarDomain",
    "OrthonormalBasis",
    "SzegoSolution",
    "area_moment",
    "bergman_szego_fit",
    "build_basis",
    "classify",
    "f_field_mean",
    "green",
    "laurent_norm",
    "reinhardt",
    "reinhardt_radial_integral",
    "robin",
    "robin_extrapolated",
    "sublevel_profile",
    "suita_margin",
    "szego_kernel",
    "szego_zero_count",
    "transformation_residual",
]
