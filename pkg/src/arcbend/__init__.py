"""Circular-arc graphs as edge intersection graphs of bounded-bend grid paths."""

from .circle import (
    Arc,
    CircularArcModel,
    ModelError,
    arcs_intersect,
    check_model,
    contains_position,
    covers_circle,
    dominates,
    intersection_graph,
    is_normal,
    is_normal_helly,
    properly_contains,
    shrink_dominated,
    validate_model,
)
from .families import (
    canonical_cycle_power_model,
    cycle_power,
    random_ca_model,
    spider_fixture,
    thick_spider,
)
from .graph import Graph
from .grid import (
    C4Kind,
    C4Shape,
    GridModel,
    GridPath,
    GridPoint,
    Rect,
    bend_count,
    classify_c4,
    edge_set,
    epg_intersection_graph,
    max_bends,
    validate_epr,
)
from .recognition import (
    B1Decision,
    contains_induced,
    cycle_power_contains_criterion,
    decide_b1_epr,
    has_power_cycle_obstruction,
    is_chordal,
)
from .transforms import (
    FourPoints,
    SeparationWitness,
    ca_to_b3_epg,
    ca_to_b4_epr,
    derive_separating_cliques,
    epr_to_ca,
    find_four_points,
    nca_to_b2_epr,
    nhca_to_b1_epr,
    verify_separation,
)

__version__ = "0.1.0"
