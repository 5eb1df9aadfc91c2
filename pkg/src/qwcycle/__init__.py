"""Exact asymptotics of coined quantum walks on N-cycles.

The package computes, in closed form, the quantities a discrete-time coined
walk on a cycle settles into under time averaging — the limiting position
distribution, the asymptotic reduced coin density matrix, and the
entanglement temperature read off from its spectrum — and ships a
brute-force evolution oracle to check every closed form against.
"""

from .angles import canonicalize, parse_angle
from .asymptotics import (
    asymptotic_reduced_density,
    hadamard_local_ld,
    limiting_distribution,
    m_kk_closed_form,
    m_matrix,
    theta_matrix,
)
from .coin import CoinParams, build_coin, diaz_params, hadamard_params, parse_coin
from .evolution import (
    evolve,
    position_distribution,
    reduce_to_coin,
    step,
    time_avg_density,
    time_avg_distribution,
    time_avg_reduced_density,
)
from .spectral import DegeneracyTable, KBlock, degeneracy_table, solve_all_blocks, solve_block
from .state import (
    Bloch,
    EntangledPair,
    Local,
    Raw,
    SeparablePair,
    WalkState,
    make_state,
    momentum_spinors,
    parse_state,
)
from .thermo import (
    ScanGrid,
    TemperatureResult,
    bloch_temperature_scan,
    coin_phase_temperature_scan,
    entanglement_temperature,
    temperature_ratio,
)
from .verify import VerifyConfig, VerifyReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "Bloch",
    "CoinParams",
    "DegeneracyTable",
    "EntangledPair",
    "KBlock",
    "Local",
    "Raw",
    "ScanGrid",
    "SeparablePair",
    "TemperatureResult",
    "VerifyConfig",
    "VerifyReport",
    "WalkState",
    "asymptotic_reduced_density",
    "bloch_temperature_scan",
    "build_coin",
    "canonicalize",
    "coin_phase_temperature_scan",
    "degeneracy_table",
    "diaz_params",
    "entanglement_temperature",
    "evolve",
    "hadamard_local_ld",
    "hadamard_params",
    "limiting_distribution",
    "m_kk_closed_form",
    "m_matrix",
    "make_state",
    "momentum_spinors",
    "parse_angle",
    "parse_coin",
    "parse_state",
    "position_distribution",
    "reduce_to_coin",
    "run_verification",
    "solve_all_blocks",
    "solve_block",
    "step",
    "temperature_ratio",
    "theta_matrix",
    "time_avg_density",
    "time_avg_distribution",
    "time_avg_reduced_density",
]
