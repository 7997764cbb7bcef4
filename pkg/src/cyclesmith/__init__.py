"""Construct, encode, count and verify universal and overlap cycles."""

from cyclesmith.poset import NLPoset, antichains, enumerate_posets
from cyclesmith.coding import CyclicCode, decode_code, encode_poset
from cyclesmith.eulergraph import MultiDigraph, best_count
from cyclesmith.posetcycle import build_arc_digraph, count_ucycles, generate_ucycle, verify_ucycle

__all__ = [
    "NLPoset",
    "antichains",
    "enumerate_posets",
    "CyclicCode",
    "decode_code",
    "encode_poset",
    "MultiDigraph",
    "best_count",
    "build_arc_digraph",
    "count_ucycles",
    "generate_ucycle",
    "verify_ucycle",
]

__version__ = "0.1.0"
