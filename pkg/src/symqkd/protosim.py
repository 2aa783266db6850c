"""Seedable Monte Carlo simulation of BB84/six-state rounds.

The simulator samples the classical statistics the channel induces: Bob's
outcome follows Alice's bit with probability F = 1 - D when the bases
match, and is uniform when they differ (mutually unbiased bases make every
mismatched measurement a coin flip; ``mismatch_outcome_check`` verifies
that shortcut against the actual reduced state). Eve's quantum memory is
never simulated - her information is bounded analytically.

Randomness: numpy's PCG64, with exactly 5 draws consumed per round (bit,
Alice basis, Bob basis, outcome, estimation pick). Because the stream is
split by round index, a run may be partitioned into arbitrary blocks
without changing any result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .attack import AttackParams, bob_state
from .states import basis_labels, basis_of, state_vector

__all__ = [
    "DRAWS_PER_ROUND",
    "RNG_NAME",
    "RoundBatch",
    "SimConfig",
    "SimResult",
    "mismatch_outcome_check",
    "result_record",
    "run_simulation",
    "simulate_rounds",
]

RNG_NAME = "numpy-pcg64"
DRAWS_PER_ROUND = 5


@dataclass(frozen=True)
class SimConfig:
    """One reproducible protocol run; the protocol is the attack's."""

    params: AttackParams
    rounds: int
    seed: int
    estimation_fraction: float = 0.1

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ValueError("rounds must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if not 0.0 < self.estimation_fraction < 1.0:
            raise ValueError("estimation_fraction must lie strictly between 0 and 1")


@dataclass(frozen=True)
class SimResult:
    sifted_count: int
    sift_fraction: float
    qber_hat: float
    qber_se: float
    estimation_count: int


@dataclass(frozen=True)
class RoundBatch:
    """Per-round arrays for a contiguous slice of a run.

    Basis entries index the protocol's basis tuple. ``kept`` marks rounds
    that survive sifting; ``estimation_pick`` marks the kept rounds
    reserved for error estimation (the rest form the key).
    """

    alice_bit: np.ndarray
    alice_basis: np.ndarray
    bob_basis: np.ndarray
    bob_bit: np.ndarray
    kept: np.ndarray
    estimation_pick: np.ndarray


def _round_uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Uniforms for rounds [start, start+count), identical for any blocking."""
    bg = np.random.PCG64(seed)
    if start:
        bg.advance(start * DRAWS_PER_ROUND)
    return np.random.Generator(bg).random((count, DRAWS_PER_ROUND))


def simulate_rounds(cfg: SimConfig, start: int, count: int) -> RoundBatch:
    """Simulate rounds [start, start+count) of the configured run."""
    u = _round_uniforms(cfg.seed, start, count)
    n_bases = len(cfg.params.protocol.bases)
    d = cfg.params.qber
    alice_bit = (u[:, 0] < 0.5).astype(np.uint8)
    alice_basis = np.minimum((u[:, 1] * n_bases).astype(np.intp), n_bases - 1)
    bob_basis = np.minimum((u[:, 2] * n_bases).astype(np.intp), n_bases - 1)
    kept = alice_basis == bob_basis
    flipped = (u[:, 3] < d).astype(np.uint8)
    uniform_bit = (u[:, 3] < 0.5).astype(np.uint8)
    bob_bit = np.where(kept, alice_bit ^ flipped, uniform_bit).astype(np.uint8)
    estimation_pick = kept & (u[:, 4] < cfg.estimation_fraction)
    return RoundBatch(
        alice_bit=alice_bit,
        alice_basis=alice_basis,
        bob_basis=bob_basis,
        bob_bit=bob_bit,
        kept=kept,
        estimation_pick=estimation_pick,
    )


def run_simulation(cfg: SimConfig, block_size: int | None = None) -> SimResult:
    """Run the whole protocol and return sifted-key statistics.

    Deterministic in cfg (including the seed); ``block_size`` only chunks
    the work and never changes the outcome.
    """
    block = cfg.rounds if block_size is None else int(block_size)
    if block < 1:
        raise ValueError("block_size must be positive")
    sifted = 0
    est_n = 0
    est_err = 0
    for start in range(0, cfg.rounds, block):
        batch = simulate_rounds(cfg, start, min(block, cfg.rounds - start))
        sifted += int(batch.kept.sum())
        est_n += int(batch.estimation_pick.sum())
        est_err += int((batch.estimation_pick & (batch.bob_bit != batch.alice_bit)).sum())
    qber_hat = est_err / est_n if est_n else 0.0
    var = qber_hat * (1.0 - qber_hat)
    qber_se = math.sqrt(var / est_n) if est_n and var > 0.0 else 0.0
    return SimResult(
        sifted_count=sifted,
        sift_fraction=sifted / cfg.rounds,
        qber_hat=qber_hat,
        qber_se=qber_se,
        estimation_count=est_n,
    )


def result_record(cfg: SimConfig, result: SimResult) -> dict:
    """JSON-ready record of a run (config echo plus statistics)."""
    return {
        "protocol": cfg.params.protocol.value,
        "x": cfg.params.x,
        "y": cfg.params.y,
        "D_analytic": cfg.params.qber,
        "rounds": cfg.rounds,
        "seed": cfg.seed,
        "sifted_count": result.sifted_count,
        "sift_fraction": result.sift_fraction,
        "qber_hat": result.qber_hat,
        "qber_se": result.qber_se,
        "estimation_count": result.estimation_count,
        "rng_name": RNG_NAME,
    }


def mismatch_outcome_check(v: np.ndarray, alice_u: str, bob_basis: str) -> tuple[float, float]:
    """Born probabilities of Bob's two outcomes in a non-matching basis.

    For any symmetric attack both come out 1/2, which is what licenses the
    simulator's uniform sampling on basis mismatch.
    """
    if basis_of(alice_u) == bob_basis:
        raise ValueError("bob_basis must differ from the basis of alice_u")
    rho = bob_state(v, alice_u)
    w0, w1 = basis_labels(bob_basis)
    p = []
    for w in (w0, w1):
        ket = state_vector(w)
        p.append(float(np.vdot(ket, rho @ ket).real))
    return p[0], p[1]
