"""Direct time evolution of the coined walk and time-averaged observables.

This module is the package's reference oracle: everything here is a literal
transcription of the dynamics (coin, then conditional shift), with no spectral
shortcuts.  The closed-form results elsewhere are validated against these
time averages.

One step is U = S (Gamma (x) I_p): the coin acts on chirality at every node,
then the shift moves chirality-0 amplitude from node j to j+1 and chirality-1
amplitude from j to j-1 (mod N).

Time averages run over t = 1..t_max inclusive; any finite choice of window
endpoints vanishes in the t_max -> infinity limit, and fixing one makes the
oracle deterministic for tests.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from .state import WalkState

__all__ = [
    "apply_shift",
    "step",
    "evolve",
    "time_avg_density",
    "time_avg_distribution",
    "time_avg_reduced_density",
    "position_distribution",
    "reduce_to_coin",
    "check_density",
    "check_reduced_density",
    "check_distribution",
]


def apply_shift(state: WalkState) -> WalkState:
    """Conditional shift: s=0 moves +1 node, s=1 moves -1 node (mod N)."""
    grid = state.as_grid()
    return WalkState.from_grid(
        np.stack([np.roll(grid[0], 1), np.roll(grid[1], -1)])
    )


def step(state: WalkState, coin: NDArray[np.complex128]) -> WalkState:
    """One walk step: coin on chirality, then the conditional shift."""
    return apply_shift(WalkState.from_grid(coin @ state.as_grid()))


def _step_grid(grid: NDArray[np.complex128], coin: NDArray[np.complex128]) -> NDArray[np.complex128]:
    # internal hot loop: same arithmetic as step(), no WalkState re-validation
    out = coin @ grid
    out[0] = np.roll(out[0], 1)
    out[1] = np.roll(out[1], -1)
    return out


def evolve(state0: WalkState, coin: NDArray[np.complex128], t: int) -> WalkState:
    """t-fold application of ``step``, same arithmetic without per-step checks.

    Repeated float matmuls leak norm at ~1e-17 per step; for long horizons
    that legitimate rounding drift would trip the state's normalization gate,
    so it is stripped at the end.  Drift beyond 1e-9 means the coin was not
    unitary and raises instead.
    """
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    grid = state0.as_grid().copy()
    for _ in range(int(t)):
        grid = _step_grid(grid, coin)
    norm = np.linalg.norm(grid)
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"evolution lost unitarity: |norm - 1| = {abs(norm - 1.0):.3e}")
    return WalkState.from_grid(grid / norm)


def time_avg_density(
    state0: WalkState, coin: NDArray[np.complex128], t_max: int
) -> NDArray[np.complex128]:
    """(1/t_max) sum_{t=1..t_max} |psi(t)><psi(t)|, streamed (never stores the
    trajectory).  2N x 2N, Hermitian, trace 1."""
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    grid = state0.as_grid().copy()
    acc = np.zeros((2 * state0.n_nodes,) * 2, dtype=np.complex128)
    for _ in range(int(t_max)):
        grid = _step_grid(grid, coin)
        flat = grid.reshape(-1)
        acc += np.outer(flat, flat.conj())
    acc /= t_max
    return acc


def time_avg_distribution(
    state0: WalkState, coin: NDArray[np.complex128], t_max: int
) -> NDArray[np.float64]:
    """(1/t_max) sum_{t=1..t_max} of the node distribution; length N, sums to 1.

    Accumulates probabilities directly (O(N) per step) rather than going
    through the 2N x 2N density matrix.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    grid = state0.as_grid().copy()
    acc = np.zeros(state0.n_nodes)
    for _ in range(int(t_max)):
        grid = _step_grid(grid, coin)
        acc += (grid.real**2 + grid.imag**2).sum(axis=0)
    return acc / t_max


def time_avg_reduced_density(
    state0: WalkState, coin: NDArray[np.complex128], t_max: int
) -> NDArray[np.complex128]:
    """Time-averaged coin-space density matrix, accumulated directly in 2x2.

    Equal to reduce_to_coin(time_avg_density(...)) by linearity of the partial
    trace, but usable at N=100, t_max=1e5 where the 2N x 2N average is not.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    grid = state0.as_grid().copy()
    acc = np.zeros((2, 2), dtype=np.complex128)
    for _ in range(int(t_max)):
        grid = _step_grid(grid, coin)
        acc += np.einsum("an,bn->ab", grid, grid.conj())
    return acc / t_max


def position_distribution(state: WalkState) -> NDArray[np.float64]:
    """Marginal node distribution |a_{0,j}|^2 + |a_{1,j}|^2."""
    grid = state.as_grid()
    return (grid.real**2 + grid.imag**2).sum(axis=0)


def reduce_to_coin(rho: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Partial trace over position: (rho_c)_{s,s'} = sum_j rho_{(s,j),(s',j)}."""
    rho = np.asarray(rho)
    dim = rho.shape[0]
    if rho.shape != (dim, dim) or dim % 2:
        raise ValueError(f"expected a (2N, 2N) matrix, got {rho.shape}")
    n = dim // 2
    return np.einsum("sjtj->st", rho.reshape(2, n, 2, n))


# ---------------------------------------------------------------------------
# invariant checks shared by oracle outputs and CLI writers
# ---------------------------------------------------------------------------

def check_density(rho: NDArray[np.complex128], tol: float = 1e-10) -> None:
    """Raise unless rho is Hermitian, trace-1, and PSD within ``tol``."""
    if np.abs(rho - rho.conj().T).max() > tol:
        raise ValueError("density matrix is not Hermitian within tolerance")
    if abs(np.trace(rho) - 1.0) > tol:
        raise ValueError("density matrix trace differs from 1 beyond tolerance")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise ValueError("density matrix has an eigenvalue below -tolerance")


def check_reduced_density(rho_c: NDArray[np.complex128], tol: float = 1e-10) -> None:
    """Same invariants specialized to the 2x2 coin-space matrix."""
    rho_c = np.asarray(rho_c)
    if rho_c.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {rho_c.shape}")
    check_density(rho_c, tol=tol)


def check_distribution(probs: NDArray[np.float64], tol: float = 1e-10) -> None:
    """Raise unless probs is a probability vector (entries >= -1e-12, sum 1)."""
    probs = np.asarray(probs)
    if probs.min() < -1e-12:
        raise ValueError("distribution has a negative entry beyond -1e-12")
    if abs(probs.sum() - 1.0) > tol:
        raise ValueError("distribution does not sum to 1 within tolerance")
