"""Disjointness graphs of x-monotone curves: ordered-graph recognition,
magical closures, certified colourings, exact curve realizations and the
randomized extremal constructions with brute-force checks."""

from .coloring import (
    Coloring,
    anchored_clique_size,
    chain_heights,
    color_double_magical,
    color_semi_comparability,
    color_xmonotone,
)
from .construction import (
    check_lex,
    construct,
    find_hole_triangles,
    layout,
    lex_points,
    paper_params,
    s_set,
    sample_edges,
    verify_claim,
)
from .errors import InputError, OracleRefusal, PreconditionError
from .oracle import (
    chromatic_number,
    clique_number,
    closure_oracle,
    independence_number,
    witness_search,
)
from .ordered import (
    OrderedGraph,
    emit_ograph,
    extract_partial_orders,
    is_double_magical,
    is_magical,
    is_mountain_path,
    is_semi_comparability,
    magical_closure,
    parse_ograph,
)
from .realization import (
    CurveFamily,
    Polyline,
    curves_intersect,
    disjointness_graph,
    emit_curves,
    parse_curves,
    realize_double_magical,
    realize_magical,
)
from .svg import emit_svg

__version__ = "0.1.0"
