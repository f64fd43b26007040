"""Matching powers of monomial ideals: invariants, structure tests, graph edge ideals."""

from matchpow._core import (  # noqa: F401
    CapExceeded,
    MatchpowError,
    MonomialIdeal,
    SimpleGraph,
    WeightedOrientedGraph,
    betti,
    bounding_multidegree,
    edge_ideal,
    generator_matchings,
    has_linear_quotients,
    has_linear_resolution,
    induced_matching_number,
    initial_degree,
    is_linearly_related,
    is_matroidal,
    is_polymatroidal,
    longest_induced_path,
    matching_number,
    matching_power,
    monomial_grade,
    normalized_depth,
    oriented_edge_ideal,
    parse_ideal,
    polarize,
    radical,
    validate_weights,
    verify_examples,
    weighted_induced_matching_number,
)

__version__ = "0.1.0"
