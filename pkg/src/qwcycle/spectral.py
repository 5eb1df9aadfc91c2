"""Momentum-space structure of the walk: 2x2 blocks, spectra, degeneracies.

The Fourier transform over nodes block-diagonalizes one walk step into N
independent 2x2 unitaries

    B_k = diag(e^{-i w}, e^{+i w}) Gamma,      w = 2 pi k / N.

Writing Gamma's global phase as e^{i eta/2}, the eigenvalues of B_k are
e^{i eta/2} e^{+/- i alpha} with

    cos(alpha) = cos(theta) cos(w - zeta),  alpha in [0, pi],

so each block contributes one eigenvalue on the upper arc (zone I, +alpha)
and one on the lower arc (zone II, -alpha).  Eigenvalues of two different
blocks k, k' can only coincide when N (1 + zeta/pi) is an integer, in which
case the partners satisfy k + k' = N zeta / pi (mod N); that pairing is what
``degeneracy_table`` computes and what the limiting distribution sums over.

Eigenvectors: with the phase-stripped block [[A, B], [C, D]] (A = e^{i(zeta-w)}
cos theta, B = e^{i(xi-w)} sin theta, C = -conj(B), D = conj(A)), both columns
of adj(mu I - B_k) are eigenvectors for eigenvalue mu; we take whichever of
v1 = (B, mu - A) and v2 = (mu - D, C) has the larger norm.  Since
(mu - A) + (mu - D) = 2 i sin(alpha) mu' for a unimodular mu', the larger norm
is at least |sin alpha|, so the construction is well-conditioned whenever the
block is not scalar.  If sin(alpha) <= 1e-9 the block *is* scalar (+/- the
global phase) and the canonical basis is returned.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from .coin import CoinParams, build_coin

__all__ = [
    "KBlock",
    "DegeneracyTable",
    "block",
    "solve_block",
    "solve_all_blocks",
    "degeneracy_table",
]

# below this, a block is treated as scalar and gets the canonical eigenbasis
_SCALAR_TOL = 1e-9
# eigenvalue coincidence threshold used for degeneracy-driven matching
EIGENVALUE_MATCH_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class KBlock:
    """Spectral data of one momentum block.

    ``eigenvalues[0]`` is the zone-I branch e^{i eta/2} e^{+i alpha} and
    ``eigenvalues[1]`` the zone-II branch e^{i eta/2} e^{-i alpha}; column i of
    ``vectors`` is the corresponding normalized eigenvector.  The global coin
    phase is kept inside the eigenvalues so that B_k v = lambda v holds exactly
    as stated.
    """

    k: int
    n_nodes: int
    omega: float
    alpha: float
    eigenvalues: tuple[complex, complex]
    vectors: NDArray[np.complex128]  # (2, 2), columns are eigenvectors


def block(k: int, coin: CoinParams, n_nodes: int) -> NDArray[np.complex128]:
    """The 2x2 momentum block diag(e^{-i w}, e^{i w}) Gamma at w = 2 pi k / N."""
    if not 0 <= k < n_nodes:
        raise ValueError(f"k={k} out of range for N={n_nodes}")
    w = 2.0 * math.pi * k / n_nodes
    phase = np.array([[cmath.exp(-1j * w), 0.0], [0.0, cmath.exp(1j * w)]])
    return phase @ build_coin(coin)


def _eigvec(a: complex, b: complex, c: complex, d: complex, mu: complex) -> NDArray[np.complex128]:
    v1 = np.array([b, mu - a], dtype=np.complex128)
    v2 = np.array([mu - d, c], dtype=np.complex128)
    n1 = abs(v1[0]) ** 2 + abs(v1[1]) ** 2
    n2 = abs(v2[0]) ** 2 + abs(v2[1]) ** 2
    v = v1 if n1 >= n2 else v2
    return v / math.sqrt(max(n1, n2))


def solve_block(k: int, coin: CoinParams, n_nodes: int) -> KBlock:
    """Eigen-decompose one momentum block in closed form."""
    if not 0 <= k < n_nodes:
        raise ValueError(f"k={k} out of range for N={n_nodes}")
    w = 2.0 * math.pi * k / n_nodes
    cos_alpha = math.cos(coin.theta) * math.cos(w - coin.zeta)
    alpha = math.acos(min(1.0, max(-1.0, cos_alpha)))
    eta_phase = cmath.exp(0.5j * coin.eta)
    lam_i = eta_phase * cmath.exp(1j * alpha)
    lam_ii = eta_phase * cmath.exp(-1j * alpha)

    if math.sin(alpha) <= _SCALAR_TOL:
        vectors = np.eye(2, dtype=np.complex128)
    else:
        a = cmath.exp(1j * (coin.zeta - w)) * math.cos(coin.theta)
        b = cmath.exp(1j * (coin.xi - w)) * math.sin(coin.theta)
        c = -b.conjugate()
        d = a.conjugate()
        vectors = np.column_stack(
            [
                _eigvec(a, b, c, d, cmath.exp(1j * alpha)),
                _eigvec(a, b, c, d, cmath.exp(-1j * alpha)),
            ]
        )
    vectors.flags.writeable = False  # KBlocks are shared via the cache below
    return KBlock(
        k=k,
        n_nodes=n_nodes,
        omega=w,
        alpha=alpha,
        eigenvalues=(lam_i, lam_ii),
        vectors=vectors,
    )


@lru_cache(maxsize=64)
def solve_all_blocks(coin: CoinParams, n_nodes: int) -> tuple[KBlock, ...]:
    """All N blocks of a coin, cached on (coin, N)."""
    return tuple(solve_block(k, coin, n_nodes) for k in range(n_nodes))


@dataclass(frozen=True, eq=False)
class DegeneracyTable:
    """Cross-block eigenvalue coincidences for one (coin, N).

    ``pairs`` maps every momentum k to its degenerate partner k' when the
    integrality condition holds, and is empty otherwise.  ``self_paired``
    collects the k with partner k; those contribute no cross term (their
    weight is already in the diagonal k = k' sum).
    """

    n_nodes: int
    zeta: float
    pairs: dict[int, int]
    self_paired: frozenset[int]

    def cross_pairs(self) -> list[tuple[int, int]]:
        """Ordered (k, partner) pairs with partner != k."""
        return [(k, kp) for k, kp in self.pairs.items() if k != kp]


def degeneracy_table(coin: CoinParams, n_nodes: int) -> DegeneracyTable:
    """Detect the k + k' = N zeta / pi (mod N) pairing.

    The pairing exists iff N (1 + zeta/pi) is an integer; the test uses an
    absolute tolerance of 1e-9, which float inputs built from rational-of-pi
    tokens meet comfortably for any realistic N.
    """
    n = int(n_nodes)
    m = n * (1.0 + coin.zeta / math.pi)
    pairs: dict[int, int] = {}
    self_paired: set[int] = set()
    if abs(m - round(m)) <= 1e-9:
        r = round(n * coin.zeta / math.pi)
        for k in range(n):
            kp = (r - k) % n
            pairs[k] = kp
            if kp == k:
                self_paired.add(k)
    return DegeneracyTable(
        n_nodes=n, zeta=coin.zeta, pairs=pairs, self_paired=frozenset(self_paired)
    )
