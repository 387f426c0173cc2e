from .graph import Edge, Orientation, TerminalGraph, Vertex, canonical_edge
from .io import parse_graph, read_graph, serialize_graph, write_graph
from .transform import (
    ComponentQuotient,
    SubdivisionRecord,
    component_id,
    component_passages,
    contract_nonterminal_components,
    copy_ids,
    expand_weighted,
    expansion_copies,
    max_component_size,
    subdivide_terminal_edges,
    subdivision_id,
    to_networkx,
    weak_components,
)
