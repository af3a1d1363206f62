"""Geometric model of m-cluster categories of type A.

Thin re-export of the compiled extension; see the README for the CLI.
"""

from ._mcluster import (  # noqa: F401
    ar_triangle,
    classify_morphism,
    cone,
    crosses,
    decompose,
    ext1_nonzero,
    framed_set,
    gamma,
    hom_dim,
    is_m_diagonal,
    m_diagonals,
    mesh_hom_dim,
    mirror,
    mirror_criterion,
    normalize,
    orbit_component_count,
    predict,
    polygon_sides,
    rotate_tau_m,
    verify_cell,
    NoCanonicalTriangle,
    TheoremViolation,
)
