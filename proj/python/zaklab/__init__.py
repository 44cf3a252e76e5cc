"""Lattice Zak transforms, multi-tiling detection, and exponential frame diagnostics."""

from ._zaklab import (  # noqa: F401
    Domain,
    Lattice,
    Window,
    ZaklabError,
    biorthogonality_check,
    check_isometry,
    check_pair,
    check_quasiperiodicity,
    classify,
    cover_set,
    density_product,
    dual_coefficients,
    find_zero,
    frame_sum_check,
    fundamental_domain,
    gram_section,
    gram_section_list,
    make_lattice,
    multitiling_level,
    orthogonality_check,
    riesz_bounds_estimate,
    theorem_harness,
    zak_eval,
    zak_grid,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
