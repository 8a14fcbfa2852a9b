"""Spectral analysis of hypergraphs under the ``1/(|e|-1)`` adjacency matrix."""

__version__ = "0.1.0"

from ._accel import BACKEND
from .canon import (
    CanonicalForm,
    OrbitPartition,
    are_isomorphic,
    automorphism_generators,
    canonical_form,
    orbit_partition,
    permutation_commutes,
)
from .hypercore import (
    Hypercycle,
    Hypergraph,
    HypergraphError,
    Hyperpath,
    cyclicity_r,
    degree,
    distance,
    edit,
    find_unique_cycle,
    is_connected,
    is_k_uniform,
    is_unicyclic,
)
from .spectra import (
    AdjacencyMatrix,
    ConvergenceError,
    SpectralResult,
    adjacency_matrix,
    check_internal_edge_formula,
    check_orbit_constancy,
    check_pendant_formula,
    rayleigh_quotient,
    spectral_radius,
)

__all__ = [
    "BACKEND", "AdjacencyMatrix", "CanonicalForm", "ConvergenceError", "Hypercycle", "Hypergraph",
    "HypergraphError", "Hyperpath", "OrbitPartition", "SpectralResult", "adjacency_matrix",
    "are_isomorphic", "automorphism_generators", "canonical_form", "check_internal_edge_formula",
    "check_orbit_constancy", "check_pendant_formula", "cyclicity_r", "degree", "distance", "edit",
    "find_unique_cycle", "is_connected", "is_k_uniform", "is_unicyclic", "orbit_partition",
    "permutation_commutes", "rayleigh_quotient", "spectral_radius",
]
