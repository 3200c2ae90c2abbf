"""Permutation hiding graphs: generators, structural checks and numeric tools.

Permutations are zero-indexed image lists; distributions on S_b are lists
indexed by Lehmer rank.
"""

from ._core import (
    Edge,
    LayeredGraph,
    PhlabError,
    basic,
    compose,
    convolve,
    decompose,
    dichotomy_check,
    extract_permutation,
    gen_general,
    gen_simple,
    generate_artifacts,
    hph_roundtrip,
    inverse,
    irrep_dims,
    kl,
    l2_sq,
    max_matching_size,
    parity_distribution,
    random_distribution,
    random_permutation,
    sigma_cross,
    sigma_eq,
    sort_network_depth,
    tvd,
    vertex_count,
)

__version__ = "0.1.0"
