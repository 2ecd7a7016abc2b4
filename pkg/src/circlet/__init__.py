"""Exact tools for the circlet inequalities of the circulant TSP."""

from .core import (
    Caps,
    FractionalPoint,
    Instance,
    Tour,
    edge_length,
    get_caps,
    identity_tour,
    length_profile,
    parse_input,
    project_weights,
    random_tour,
    serialize,
)
from .errors import (
    BudgetExceededError,
    CircletError,
    DomainError,
    InvalidEdgeError,
    InvalidTourError,
    ParseError,
    UnsupportedInstanceError,
)
from .inequality import (
    check_circlet,
    circlet_coeffs,
    circlet_strength,
    crown_strength,
    evaluate,
    lemma1_lower_bound,
    separate,
    tt_coeffs,
    tt_triangle_check,
)
from .oracle import (
    LengthMultiset,
    buratti_condition,
    cost_census,
    edge_length_feasible,
    el_points,
    enumerate_tours,
    min_tour_cost,
)
from .contraction import (
    StructureHit,
    aggregate_delta,
    appendix_case_value,
    contract,
    detect_structures,
    group_walk_trace,
    per_edge_delta,
    window_count,
    window_identity,
)
from .facet import base_tours, certify_facet, full_family, incidence_vector, k_tour
from .subtour import (
    eulerian_counterexample,
    gap_instance,
    gap_ratio,
    half_one_point,
    lambda_bounds,
    lambda_point,
    min_fx_at_half_one,
    subtour_feasible,
)

__version__ = "0.1.0"
