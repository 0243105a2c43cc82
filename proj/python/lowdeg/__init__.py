"""Exact trajectory degree analysis of rational motions.

Motions are written in the expression language of the command line tool,
for example ``"(t^2+1)*(t-k) + eps*(t*i+j)"``.
"""

from ._lowdeg import (
    InconsistencyError,
    LowdegError,
    ParseError,
    ValidationError,
    analyze,
    degree_oracle,
    generate,
    inverse,
    normal_form,
    parse_motion,
    trajectory,
    trajectory_degree,
    validate,
)

__all__ = [
    "InconsistencyError",
    "LowdegError",
    "ParseError",
    "ValidationError",
    "analyze",
    "degree_oracle",
    "generate",
    "inverse",
    "normal_form",
    "parse_motion",
    "trajectory",
    "trajectory_degree",
    "validate",
]
