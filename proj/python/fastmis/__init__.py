"""Maximum independent set heuristics with online reductions."""

from ._fastmis import (
    ContractViolation,
    Graph,
    OracleRefusal,
    ParseError,
    exact_mis,
    kernel_stats,
    max_speedup,
    quality_target,
    read_graph,
    solve,
    time_to_size,
    verify,
)

ALGORITHMS = ("onlinemis", "kermis", "arw", "kernel")

__all__ = [
    "ALGORITHMS",
    "ContractViolation",
    "Graph",
    "OracleRefusal",
    "ParseError",
    "exact_mis",
    "kernel_stats",
    "max_speedup",
    "quality_target",
    "read_graph",
    "solve",
    "time_to_size",
    "verify",
]
