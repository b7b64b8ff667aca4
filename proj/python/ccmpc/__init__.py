"""Connected-components algorithms on a simulated MPC cluster."""

from ._core import (
    AbortError,
    ConfigError,
    ConsistencyError,
    Error,
    Graph,
    ParseError,
    SpaceViolation,
    algorithms,
    diameter,
    generate,
    gnp,
    load_edge_list,
    run,
    union_find,
    verify,
)

__all__ = [
    "AbortError",
    "ConfigError",
    "ConsistencyError",
    "Error",
    "Graph",
    "ParseError",
    "SpaceViolation",
    "algorithms",
    "diameter",
    "generate",
    "gnp",
    "load_edge_list",
    "run",
    "union_find",
    "verify",
]
