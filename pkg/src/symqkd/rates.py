"""Entropies, Holevo information, and Devetak-Winter secret-key rates.

Two independent routes to the same numbers live here. The numeric route
runs the full pipeline (attack isometry, partial traces, eigenvalues,
entropies, Holevo information) and assembles R = I_AB - chi_AE. The closed
route evaluates the known key-rate formulas of the two protocols directly
as functions of the QBER. Their agreement over the whole attack family is
the main correctness check of the package.

All logarithms are base 2; entropies are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .attack import AttackParams, attack_isometry, eve_state, qber_bb84
from .smallmat import hermitian_eigenvalues
from .states import Protocol, basis_labels

__all__ = [
    "FamilyMinimum",
    "RatePoint",
    "Threshold",
    "binary_entropy",
    "branch_eigenvalue",
    "closed_rate_bb84",
    "closed_rate_six_state",
    "closed_rate_six_state_alt",
    "dw_rate_numeric",
    "find_threshold",
    "general_rate_bb84",
    "holevo_information",
    "minimize_family_rate",
    "von_neumann_entropy",
]

_DOMAIN_SLACK = 1e-12
_EIG_CLAMP = -1e-12
_AVG_TOL = 1e-10
_RATE_CONSISTENCY_TOL = 1e-9
_BISECT_TOL = 1e-10


def binary_entropy(p: float) -> float:
    """Shannon entropy of a bit, H(p) = -p log2 p - (1-p) log2 (1-p)."""
    if not -_DOMAIN_SLACK <= p <= 1.0 + _DOMAIN_SLACK:
        raise ValueError(f"probability {p} outside [0, 1]")
    p = min(max(p, 0.0), 1.0)
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def von_neumann_entropy(rho) -> float:
    """Entropy -Tr(rho log2 rho) of a density matrix, in bits.

    Eigenvalues in [-1e-12, 0] are clamped to zero (round-off); anything
    more negative, or a trace off unity, is rejected as a bug upstream.
    """
    lam = hermitian_eigenvalues(rho)
    if float(lam.min()) < _EIG_CLAMP:
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {lam.min():.3e})")
    if abs(float(lam.sum()) - 1.0) > 1e-12:
        raise ValueError(f"matrix trace {lam.sum()} is not 1")
    lam = np.clip(lam, 0.0, None)
    nz = lam[lam > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def holevo_information(rho_avg, rho_u, rho_flip) -> float:
    """Holevo bound on an equiprobable two-state ensemble.

    chi = S(rho_avg) - [S(rho_u) + S(rho_flip)] / 2; rho_avg must actually
    be the average of the pair. Tiny negative round-off is clamped to 0.
    """
    avg = 0.5 * (np.asarray(rho_u) + np.asarray(rho_flip))
    if float(np.linalg.norm(np.asarray(rho_avg) - avg)) > _AVG_TOL:
        raise ValueError("rho_avg is not the average of the two ensemble states")
    chi = von_neumann_entropy(rho_avg) - 0.5 * (
        von_neumann_entropy(rho_u) + von_neumann_entropy(rho_flip)
    )
    if chi < -_AVG_TOL:
        raise RuntimeError(f"Holevo information came out negative ({chi:.3e})")
    return max(chi, 0.0)


@dataclass(frozen=True)
class RatePoint:
    """One evaluation of the rate pipeline at fixed attack angles."""

    x: float
    y: float
    D: float
    I_AB: float
    chi_AE: float
    R_DW: float


def dw_rate_numeric(params: AttackParams) -> RatePoint:
    """Devetak-Winter rate of an attack, from first principles.

    Pipeline: isometry -> Eve's reduced states -> eigenvalues -> entropies
    -> Holevo information; then R = I_AB - chi_AE with I_AB = 1 - H(D).
    The symmetric attack also forces R = 1 - S(rho_E); a violation of that
    identity signals an internal inconsistency and raises.
    """
    v = attack_isometry(params)
    u0, u1 = basis_labels("Z")
    rho_u, rho_flip = eve_state(v, u0), eve_state(v, u1)
    rho_avg = 0.5 * (rho_u + rho_flip)
    chi = holevo_information(rho_avg, rho_u, rho_flip)
    d = params.qber
    i_ab = 1.0 - binary_entropy(d)
    r = i_ab - chi
    if abs(r - (1.0 - von_neumann_entropy(rho_avg))) > _RATE_CONSISTENCY_TOL:
        raise RuntimeError("rate pipeline violates R = 1 - S(rho_E) for a symmetric attack")
    return RatePoint(x=params.x, y=params.y, D=d, I_AB=i_ab, chi_AE=chi, R_DW=r)


def branch_eigenvalue(angle: float) -> float:
    """Nontrivial eigenvalue (1 - |cos angle|)/2 of a two-vector branch average."""
    return 0.5 * (1.0 - abs(math.cos(angle)))


def closed_rate_bb84(d: float) -> float:
    """Closed-form BB84 key rate 1 - 2 H(D), valid for D in [0, 1/2]."""
    if not -_DOMAIN_SLACK <= d <= 0.5 + _DOMAIN_SLACK:
        raise ValueError(f"BB84 QBER {d} outside [0, 1/2]")
    return 1.0 - 2.0 * binary_entropy(min(max(d, 0.0), 0.5))


def closed_rate_six_state(d: float) -> float:
    """Closed-form six-state key rate for D in [0, 2/3].

    R = 1 + (3D/2) log2(D/2) + (1 - 3D/2) log2(1 - 3D/2), with vanishing
    weights contributing zero at the endpoints.
    """
    if not -_DOMAIN_SLACK <= d <= 2.0 / 3.0 + _DOMAIN_SLACK:
        raise ValueError(f"six-state QBER {d} outside [0, 2/3]")
    d = max(d, 0.0)
    t1 = 1.5 * d * math.log2(0.5 * d) if d > 0.0 else 0.0
    w = 1.0 - 1.5 * d
    t2 = w * math.log2(w) if w > 0.0 else 0.0
    return 1.0 + t1 + t2


def closed_rate_six_state_alt(d: float) -> float:
    """Equivalent six-state rate (1-D)[1 - H(D/(2(1-D)))] - H(D).

    Algebraically identical to ``closed_rate_six_state`` on [0, 2/3]; past
    2/3 the inner entropy argument exceeds 1 and the form is meaningless,
    so the same domain is enforced.
    """
    if not -_DOMAIN_SLACK <= d <= 2.0 / 3.0 + _DOMAIN_SLACK:
        raise ValueError(f"six-state QBER {d} outside [0, 2/3]")
    d = min(max(d, 0.0), 2.0 / 3.0)
    f = 1.0 - d
    return f * (1.0 - binary_entropy(min(d / (2.0 * f), 1.0))) - binary_entropy(d)


def general_rate_bb84(x: float, y: float) -> float:
    """Closed-form rate of the two-angle BB84 attack.

    Assembled from the branch decomposition of Eve's average state:
    R = 1 - H(D) - (1-D) H(b(x)) - D H(b(y)) with b the branch eigenvalue.
    Coincides with 1 - 2 H(D) on the diagonal x = y.
    """
    d = qber_bb84(x, y)
    return (
        1.0
        - binary_entropy(d)
        - (1.0 - d) * binary_entropy(branch_eigenvalue(x))
        - d * binary_entropy(branch_eigenvalue(y))
    )


@dataclass(frozen=True)
class Threshold:
    """Root of a closed-form rate: the QBER where the key rate vanishes."""

    D_star: float
    residual: float
    iterations: int


def find_threshold(protocol: Protocol) -> Threshold:
    """Bisect the protocol's closed-form rate to its security threshold.

    Brackets [1e-6, 0.49] (BB84) or [1e-6, 0.6] (six-state); stops when
    |rate| <= 1e-10. A missing sign change means the rate function is
    broken, so that raises rather than returning.
    """
    if protocol is Protocol.BB84:
        fn, hi = closed_rate_bb84, 0.49
    else:
        fn, hi = closed_rate_six_state, 0.6
    lo = 1e-6
    f_lo, f_hi = fn(lo), fn(hi)
    if not f_lo > 0.0 > f_hi:
        raise RuntimeError(f"rate does not change sign over [{lo}, {hi}]")
    iterations = 0
    mid, f_mid = 0.5 * (lo + hi), fn(0.5 * (lo + hi))
    while abs(f_mid) > _BISECT_TOL and iterations < 200:
        iterations += 1
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
    if abs(f_mid) > _BISECT_TOL:
        raise RuntimeError("bisection failed to reach tolerance")
    return Threshold(D_star=mid, residual=f_mid, iterations=iterations)


class FamilyMinimum(NamedTuple):
    x: float
    y: float
    rate: float


def _constrained_y(c: float, d: float) -> float | None:
    """Angle y keeping the QBER at d for cos(x) = c; None when infeasible."""
    cy = (1.0 - c) / d - 2.0 + c
    if abs(cy) > 1.0 + 1e-12:
        return None
    return math.acos(min(max(cy, -1.0), 1.0))


def minimize_family_rate(d_target: float, grid: int) -> FamilyMinimum:
    """Minimize the BB84 rate over all attacks with a fixed QBER.

    Scans x on a grid over its feasible range (the companion angle y is
    solved from the QBER constraint; grid points with |cos y| > 1 are
    skipped), then refines the best cell by golden-section search. The
    minimum sits on the diagonal x = y at rate 1 - 2 H(D).
    """
    if not 0.0 < d_target < 0.5:
        raise ValueError(f"target QBER {d_target} outside (0, 1/2)")
    if grid < 100:
        raise ValueError("grid must be at least 100")
    # cos(y) <= 1 bounds cos(x) from below; x = 0 is a degenerate corner.
    c_min = max(-1.0, (1.0 - 3.0 * d_target) / (1.0 - d_target))
    x_hi = math.acos(c_min)
    xs = np.linspace(0.0, x_hi, grid + 1)[1:]

    def rate_at(x: float) -> float | None:
        y = _constrained_y(math.cos(x), d_target)
        if y is None:
            return None
        return general_rate_bb84(x, y)

    best_i, best_r = -1, math.inf
    for i, x in enumerate(xs):
        r = rate_at(float(x))
        if r is not None and r < best_r:
            best_i, best_r = i, r
    if best_i < 0:
        raise ValueError("no feasible attack angles at this QBER")

    # Golden-section pass over the bracketing cells.
    step = x_hi / grid
    a = max(float(xs[best_i]) - step, 0.5 * step)
    b = min(float(xs[best_i]) + step, x_hi)
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c1, c2 = b - invphi * (b - a), a + invphi * (b - a)
    f1 = rate_at(c1)
    f2 = rate_at(c2)
    while b - a > 1e-12:
        if (f1 if f1 is not None else math.inf) < (f2 if f2 is not None else math.inf):
            b, c2, f2 = c2, c1, f1
            c1 = b - invphi * (b - a)
            f1 = rate_at(c1)
        else:
            a, c1, f1 = c1, c2, f2
            c2 = a + invphi * (b - a)
            f2 = rate_at(c2)
    x_best = 0.5 * (a + b)
    y_best = _constrained_y(math.cos(x_best), d_target)
    if y_best is None:  # numerically at the feasibility edge
        y_best = math.pi
    return FamilyMinimum(x=x_best, y=y_best, rate=general_rate_bb84(x_best, y_best))
