"""Countdown puzzle toolkit: generation, search, counting, validation."""

from countdown_bench._core import (
    DataError,
    Instance,
    RetriesExhausted,
    __version__,
    branching_bound,
    count_solutions,
    emit_domain,
    emit_problem,
    format_solution,
    generate,
    generate_dataset,
    legal_actions,
    parse_solution,
    read_instances,
    solve,
    state_space_bound,
    validate,
    write_instances,
)

__all__ = [
    "DataError",
    "Instance",
    "RetriesExhausted",
    "__version__",
    "branching_bound",
    "count_solutions",
    "emit_domain",
    "emit_problem",
    "format_solution",
    "generate",
    "generate_dataset",
    "legal_actions",
    "parse_solution",
    "read_instances",
    "solve",
    "state_space_bound",
    "validate",
    "write_instances",
]
