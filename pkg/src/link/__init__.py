from .link_graph import LinkFlavor, LinkGraph, Pair, PathFilter, build_link_graph
from .matching import Matching, maximum_matching
