from .flow import FlowNetwork
from .oracle import (
    check_query,
    enumerate_min_cuts,
    every_min_cut_contains,
    is_vertex_cut,
    mincut,
    mincut_bruteforce,
    mincut_vector,
)
