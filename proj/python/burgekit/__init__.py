"""Burge codes, descent maps, Oblak chains and their finite-field oracle."""

from ._core import (
    BudgetExceeded,
    ParseError,
    annihilate,
    apply_del,
    chain,
    coordinates_of,
    decode,
    delta,
    des,
    descent_map,
    descent_set,
    diagonal_hooks,
    durfee,
    encode,
    evaluate,
    exhaustive_max_type,
    fiber,
    foata_fiber,
    format_partition,
    from_frequency,
    inv,
    is_super_distinct,
    maj,
    maximal_indices,
    oblak,
    parse_partition,
    partitions,
    path_to_partition,
    run_sweep,
    suite_names,
    to_frequency,
    two_measure,
    verify_restriction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
