from .canon import (
    EMPTY,
    CanonicalForm,
    GraphClass,
    automorphism_order,
    canonical_form,
    canonicalize,
    permutation_sign,
)
from .connectivity import bridges, components, has_bridge, is_1PI, is_connected
from .structure import (
    HalfEdgeStructure,
    LabelledOrientation,
    OrientedGraph,
    format_graph_text,
    parse_graph_text,
)
from .surgery import (
    Term,
    contract_edge,
    contract_half_pair,
    cut_paste,
    disjoint_union,
    expand_vertex,
    expand_vertex_and_glue,
)

__all__ = [
    "EMPTY",
    "CanonicalForm",
    "GraphClass",
    "HalfEdgeStructure",
    "LabelledOrientation",
    "OrientedGraph",
    "Term",
    "automorphism_order",
    "bridges",
    "canonical_form",
    "canonicalize",
    "components",
    "contract_edge",
    "contract_half_pair",
    "cut_paste",
    "disjoint_union",
    "expand_vertex",
    "expand_vertex_and_glue",
    "format_graph_text",
    "has_bridge",
    "is_1PI",
    "is_connected",
    "parse_graph_text",
    "permutation_sign",
]
