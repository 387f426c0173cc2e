from .checks import (
    check_family_distinctness,
    check_forced_terminal,
    check_subgraph_necessity,
    check_vij_necessity,
    count_distinct_vectors,
    family_members,
    family_mincut_vectors,
)
from .instance import generate_gk, pair_indices, xij_partition
