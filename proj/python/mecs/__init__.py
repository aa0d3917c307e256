"""Multipartite entangled coherent states: entanglement measures and the
entanglement-swapping generation protocol."""

from ._core import (
    bell_probabilities,
    cnot_residual,
    embed_as_qubits,
    gate_g,
    ghz_state,
    n_tangle,
    n_tangle_numeric,
    normalization,
    overlap,
    p_from_alpha,
    pair_concurrence,
    reduced_pair_density,
    solve_max_p,
    special_state_table,
    split_concurrence,
    swap_fidelity,
    three_tangle,
    w_state,
    wootters_concurrence,
)

__all__ = [
    "bell_probabilities",
    "cnot_residual",
    "embed_as_qubits",
    "gate_g",
    "ghz_state",
    "n_tangle",
    "n_tangle_numeric",
    "normalization",
    "overlap",
    "p_from_alpha",
    "pair_concurrence",
    "reduced_pair_density",
    "solve_max_p",
    "special_state_table",
    "split_concurrence",
    "swap_fidelity",
    "three_tangle",
    "w_state",
    "wootters_concurrence",
]

__version__ = "0.1.0"
