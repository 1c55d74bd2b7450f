"""Co-maximal subgroup graphs of small finite groups.

Build a group from a short spec ("D6", "C2xC2xC3", "SD(7,3,2)"), enumerate
its subgroups, form the graph on proper nontrivial subgroups where H ~ K
iff HK = G, and test it against a handful of hereditary graph classes.
"""

from .classes import CLASS_NAMES, SimpleGraph, classify, find_induced
from .comaxgraph import ComaxGraph, build_comax_graph, comax_graph, export_dot, export_json
from .errors import (
    AmbientMismatch,
    ComaxError,
    InvalidParameter,
    OutOfScope,
    ResourceLimit,
    SpecSemanticError,
    SpecSyntaxError,
)
from .groups import GroupTable, direct_product, validate
from .lattice import SubgroupLattice, SubgroupSet, all_subgroups, is_comaximal
from .spec import parse_spec, realize, render

__all__ = [
    "CLASS_NAMES", "SimpleGraph", "classify", "find_induced",
    "ComaxGraph", "build_comax_graph", "comax_graph", "export_dot", "export_json",
    "AmbientMismatch", "ComaxError", "InvalidParameter", "OutOfScope", "ResourceLimit",
    "SpecSemanticError", "SpecSyntaxError",
    "GroupTable", "direct_product", "validate",
    "SubgroupLattice", "SubgroupSet", "all_subgroups", "is_comaximal",
    "parse_spec", "realize", "render",
]
