"""Python surface of the spectral-invariant refinement toolkit."""

from _specwl import (
    CapError,
    Graph,
    InputError,
    RefinementTrace,
    SymmetricPower,
    TraceIteration,
    are_isomorphic,
    distinguish,
    encode_graph6,
    family,
    furer_pair,
    hom,
    parallel_tree_depth,
    parse_graph,
    parse_graph6,
    pebble,
    refine,
    run_suite,
    spasm,
    sub,
    symmetric_power,
)

__all__ = [
    "CapError",
    "Graph",
    "InputError",
    "RefinementTrace",
    "SymmetricPower",
    "TraceIteration",
    "are_isomorphic",
    "distinguish",
    "encode_graph6",
    "family",
    "furer_pair",
    "hom",
    "parallel_tree_depth",
    "parse_graph",
    "parse_graph6",
    "pebble",
    "refine",
    "run_suite",
    "spasm",
    "sub",
    "symmetric_power",
]
