from .pipeline import check_size_bounds, provenance_lines, size_bounds, sparsify
from .quasi_bipartite import sparsify_qb, sparsify_qb_directed, sparsify_qb_undirected
from .separator import (
    find_min_tau_separator,
    find_tau_separator,
    is_tau_separator,
    sparsify_with_separator,
    sparsify_with_vertex_cover,
)
from .tau import sparsify_tau
