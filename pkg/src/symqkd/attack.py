"""Symmetric collective attacks as Stinespring isometries.

The eavesdropper couples every signal qubit to a fresh two-qubit ancilla.
Demanding that the interaction treat all protocol signal states identically
(same fidelity, same disturbance, orthogonal branches in every protocol
basis) leaves a two-angle family of attacks on BB84 and a one-angle family
on the six-state protocol. The whole interaction is captured by the 8x2
isometry

    V |u> = |u> (x) |F_u>  +  |u+1> (x) |D_u>,    u in {0, 1},

where |F_u| carries the undisturbed branch (norm^2 = fidelity F) and |D_u|
the flipped branch (norm^2 = QBER D), and |u+1| is the within-basis
partner state. The signal qubit is the first tensor factor; the 4-dim
ancilla the second.

On Bob's side the attack acts as a uniform contraction,
rho_B(u) = F |u><u| + D |u+1><u+1|; Eve holds the complementary output
rho_E(u) = |F_u><F_u| + |D_u><D_u|. Both reductions, and residuals of all
symmetry conditions in any basis, are computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .smallmat import is_isometry, partial_trace, projector, tensor
from .states import Protocol, basis_labels, state_vector

__all__ = [
    "ANGLE_CONDITIONS",
    "BASE_CONDITIONS",
    "AncillaQuad",
    "AttackParams",
    "ConditionReport",
    "ancilla_states",
    "attack_isometry",
    "bob_state",
    "branch_states",
    "build_isometry",
    "eve_average",
    "eve_state",
    "induced_ancillas",
    "qber_bb84",
    "qber_six_state",
    "verify_symmetry",
]

_QUAD_TOL = 1e-12
_ZERO_BRANCH = 1e-15


def qber_bb84(x: float, y: float) -> float:
    """QBER induced by the two-angle BB84 attack: (1-cos x)/(2-cos x+cos y)."""
    cx, cy = math.cos(x), math.cos(y)
    den = 2.0 - cx + cy
    if abs(den) < 1e-12:
        raise ValueError("degenerate attack angles: 2 - cos(x) + cos(y) vanishes")
    return (1.0 - cx) / den


def qber_six_state(x: float) -> float:
    """QBER induced by the one-angle six-state attack: (1-cos x)/(2-cos x)."""
    cx = math.cos(x)
    return (1.0 - cx) / (2.0 - cx)


def _canonical_angle(t: float) -> float:
    """Reduce an angle to [0, pi]; rates depend on it only through cos."""
    if not math.isfinite(t):
        raise ValueError("attack angle must be finite")
    if 0.0 <= t <= math.pi:
        return t
    return math.acos(math.cos(t))


@dataclass(frozen=True)
class AttackParams:
    """Angles fully determining one symmetric attack.

    x controls the undisturbed-branch overlap, y the flipped-branch one.
    For the six-state family y is pinned to pi/2 exactly, the unique value
    compatible with symmetry in all three bases.
    """

    protocol: Protocol
    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _canonical_angle(self.x))
        object.__setattr__(self, "y", _canonical_angle(self.y))
        if self.protocol is Protocol.SIX_STATE and self.y != math.pi / 2:
            raise ValueError("six-state attacks require y = pi/2 exactly")
        d = self.qber
        if not 0.0 <= d < 1.0:
            raise ValueError(f"attack angles give QBER {d}, outside [0, 1)")

    @classmethod
    def bb84(cls, x: float, y: float | None = None) -> "AttackParams":
        """BB84 attack; y defaults to x (the rate-minimizing diagonal)."""
        return cls(Protocol.BB84, x, x if y is None else y)

    @classmethod
    def six_state(cls, x: float) -> "AttackParams":
        return cls(Protocol.SIX_STATE, x, math.pi / 2)

    @property
    def qber(self) -> float:
        if self.protocol is Protocol.BB84:
            return qber_bb84(self.x, self.y)
        return qber_six_state(self.x)

    @property
    def fidelity(self) -> float:
        return 1.0 - self.qber


@dataclass(frozen=True)
class AncillaQuad:
    """The four ancilla vectors attached to the Z-basis inputs.

    F0/F1 ride the undisturbed branch (norm^2 = fidelity), D0/D1 the
    flipped branch (norm^2 = QBER). Components are ordered to match the
    ancilla factor of the isometry.
    """

    F0: np.ndarray
    D0: np.ndarray
    F1: np.ndarray
    D1: np.ndarray


def ancilla_states(params: AttackParams) -> AncillaQuad:
    """Concrete ancilla choice realizing all symmetry conditions."""
    f, d = params.fidelity, params.qber
    sf, sd = math.sqrt(f), math.sqrt(d)
    cx, sx = math.cos(params.x), math.sin(params.x)
    cy, sy = math.cos(params.y), math.sin(params.y)
    return AncillaQuad(
        F0=np.array([sf, 0.0, 0.0, 0.0], dtype=complex),
        D0=np.array([0.0, sd, 0.0, 0.0], dtype=complex),
        F1=np.array([sf * cx, 0.0, 0.0, sf * sx], dtype=complex),
        D1=np.array([0.0, sd * cy, sd * sy, 0.0], dtype=complex),
    )


def _norm2(v: np.ndarray) -> float:
    return float(np.vdot(v, v).real)


def build_isometry(quad: AncillaQuad) -> np.ndarray:
    """Assemble the 8x2 isometry from an ancilla quad.

    The quad must satisfy the symmetry constraints (equal branch norms
    summing to one, orthogonality within and across branches); violations
    are rejected because they would break V^dag V = I.
    """
    f0, d0, f1, d1 = quad.F0, quad.D0, quad.F1, quad.D1
    nf, nd = _norm2(f0), _norm2(d0)
    checks = [
        abs(_norm2(f1) - nf),
        abs(_norm2(d1) - nd),
        abs(nf + nd - 1.0),
        abs(np.vdot(f0, d0)),
        abs(np.vdot(f1, d1)),
        abs(np.vdot(f0, d1)),
        abs(np.vdot(f1, d0)),
    ]
    if max(checks) > _QUAD_TOL:
        raise ValueError(f"ancilla quad violates symmetry constraints (max residual {max(checks):.3e})")
    zero, one = state_vector("0"), state_vector("1")
    v = np.zeros((8, 2), dtype=complex)
    v[:, 0] = tensor(zero, f0) + tensor(one, d0)
    v[:, 1] = tensor(one, f1) + tensor(zero, d1)
    if not is_isometry(v, _QUAD_TOL):
        raise ValueError("constructed map is not an isometry")
    return v


def attack_isometry(params: AttackParams) -> np.ndarray:
    """Isometry of the attack given by params."""
    return build_isometry(ancilla_states(params))


def induced_ancillas(v: np.ndarray, basis: str) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Decompose the attack in another basis.

    Writing V|u> = |u>|F_u> + |u+1>|D_u> for the pair (u, u+1) of the given
    basis, returns (F_u, D_u, F_u+1, D_u+1). In the Z basis this recovers
    the stored quad exactly.
    """
    u0, u1 = basis_labels(basis)
    out = []
    for u, partner in ((u0, u1), (u1, u0)):
        psi = (v @ state_vector(u)).reshape(2, 4)
        su, sp = state_vector(u), state_vector(partner)
        out.append(su.conj() @ psi)  # component along |u>
        out.append(sp.conj() @ psi)  # component along |u+1>
    return out[0], out[1], out[2], out[3]


def bob_state(v: np.ndarray, u: str) -> np.ndarray:
    """Bob's 2x2 reduced state for input label u (ancilla traced out)."""
    psi = v @ state_vector(u)
    return partial_trace(projector(psi), 2, 4, keep="A")


def eve_state(v: np.ndarray, u: str) -> np.ndarray:
    """Eve's 4x4 reduced state for input label u (signal traced out)."""
    psi = v @ state_vector(u)
    return partial_trace(projector(psi), 2, 4, keep="B")


def eve_average(v: np.ndarray, basis: str) -> np.ndarray:
    """Eve's state averaged over the basis pair sent with equal probability."""
    u0, u1 = basis_labels(basis)
    return 0.5 * (eve_state(v, u0) + eve_state(v, u1))


def branch_states(v: np.ndarray, basis: str) -> tuple[np.ndarray | None, np.ndarray | None]:
    """Average of the normalized branch vectors, per branch.

    Returns (rho_F, rho_D): the equal mixture of the normalized
    undisturbed-branch ancillas and of the flipped-branch ones. A branch of
    weight below 1e-15 carries no probability and is returned as None (its
    entropy contribution is zero).
    """
    fu, du, fv, dv = induced_ancillas(v, basis)

    def _avg(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        w = 0.5 * (_norm2(a) + _norm2(b))
        if w <= _ZERO_BRANCH:
            return None
        return (projector(a) + projector(b)) / (2.0 * w)

    return _avg(fu, fv), _avg(du, dv)


# Per-state conditions (each signal state separately) and pairwise ones
# (between a state and its within-basis partner).
BASE_CONDITIONS = ("F_norm", "D_norm", "FD_ortho")
ANGLE_CONDITIONS = ("FF_overlap", "DD_overlap", "FD_cross")


@dataclass(frozen=True)
class ConditionReport:
    """Max absolute residual of every symmetry condition, keyed (basis, condition)."""

    residuals: dict[tuple[str, str], float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    def within(self, tol: float) -> bool:
        return self.max_residual <= tol

    def max_over(self, conditions: tuple[str, ...], bases: tuple[str, ...] | None = None) -> float:
        vals = [
            r
            for (b, c), r in self.residuals.items()
            if c in conditions and (bases is None or b in bases)
        ]
        return max(vals)


def verify_symmetry(params: AttackParams, bases: tuple[str, ...] | None = None) -> ConditionReport:
    """Evaluate every symmetry condition of the attack, basis by basis.

    By default the protocol's own bases are checked; passing ``bases``
    overrides this, e.g. to probe a BB84 attack in the Y basis (where the
    conditions fail unless y = pi/2).
    """
    v = attack_isometry(params)
    f, d = params.fidelity, params.qber
    ff_target = f * math.cos(params.x)
    dd_target = d * math.cos(params.y)
    residuals: dict[tuple[str, str], float] = {}
    for basis in bases if bases is not None else params.protocol.bases:
        fu, du, fv, dv = induced_ancillas(v, basis)
        residuals[(basis, "F_norm")] = max(abs(_norm2(fu) - f), abs(_norm2(fv) - f))
        residuals[(basis, "D_norm")] = max(abs(_norm2(du) - d), abs(_norm2(dv) - d))
        residuals[(basis, "FD_ortho")] = max(abs(np.vdot(fu, du)), abs(np.vdot(fv, dv)))
        residuals[(basis, "FF_overlap")] = abs(np.vdot(fu, fv) - ff_target)
        residuals[(basis, "DD_overlap")] = abs(np.vdot(du, dv) - dd_target)
        residuals[(basis, "FD_cross")] = max(abs(np.vdot(fu, dv)), abs(np.vdot(fv, du)))
    return ConditionReport(residuals)
