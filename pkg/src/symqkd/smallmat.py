"""Dense complex linear algebra for spaces of dimension <= 8.

Everything operates on plain ``complex128`` numpy arrays. The module covers
exactly what the attack construction needs: Kronecker products, partial
traces over a bipartite split, a cyclic Jacobi eigensolver for Hermitian
matrices, and matrix predicates. Dimensions never exceed 8, so clarity and
robustness win over asymptotic performance everywhere.

Index convention for composite spaces: the left tensor factor varies
slowest, i.e. a (dim_a * dim_b)-dimensional vector stores component
(i_a, i_b) at flat index ``i_a * dim_b + i_b``.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "HERMITIAN_TOL",
    "hermitian_eigenvalues",
    "is_isometry",
    "partial_trace",
    "projector",
    "tensor",
]

HERMITIAN_TOL = 1e-10

_JACOBI_OFF_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 100


def _as_complex(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two matrices (or column vectors); dims multiply."""
    return np.kron(_as_complex(a), _as_complex(b))


def projector(v) -> np.ndarray:
    """Rank-1 projector |v><v| for a 1-D state vector."""
    vec = _as_complex(v).reshape(-1)
    return np.outer(vec, vec.conj())


def partial_trace(m, dim_a: int, dim_b: int, keep: str) -> np.ndarray:
    """Reduce a (dim_a*dim_b)-dimensional operator to one factor.

    ``keep="A"`` traces out the second factor and returns the dim_a
    operator; ``keep="B"`` the other way round. The trace is preserved.
    """
    a = _as_complex(m)
    n = dim_a * dim_b
    if a.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix for dims ({dim_a},{dim_b}), got {a.shape}")
    blocks = a.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == "A":
        return np.einsum("ijkj->ik", blocks)
    if keep == "B":
        return np.einsum("ijik->jk", blocks)
    raise ValueError("keep must be 'A' or 'B'")


def is_isometry(v, tol: float) -> bool:
    """True iff the columns of v are orthonormal: ||V^dag V - I||_F <= tol."""
    a = _as_complex(v)
    if a.ndim != 2 or a.shape[0] < a.shape[1]:
        return False
    gram = a.conj().T @ a
    return float(np.linalg.norm(gram - np.eye(a.shape[1]))) <= tol


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    """Zero a[p,q] (and a[q,p]) in place with one complex Jacobi rotation."""
    apq = a[p, q]
    theta = math.atan2(apq.imag, apq.real)
    # Phasing out arg(a_pq) reduces the 2x2 block to the real symmetric
    # case, where the classic angle choice annihilates the off-diagonal.
    phi = 0.5 * math.atan2(2.0 * abs(apq), a[p, p].real - a[q, q].real)
    c, s = math.cos(phi), math.sin(phi)
    phase = complex(math.cos(theta), -math.sin(theta))
    u = np.array([[c, -s], [phase * s, phase * c]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ u
    a[idx, :] = u.conj().T @ a[idx, :]
    a[p, q] = 0.0
    a[q, p] = 0.0


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, descending, by cyclic Jacobi sweeps.

    Sweeps repeat until the largest off-diagonal magnitude drops below
    1e-13 (dimensions <= 8 converge in a handful of sweeps). Non-Hermitian
    input beyond ``HERMITIAN_TOL`` is rejected.
    """
    a = _as_complex(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got {a.shape}")
    if float(np.linalg.norm(a - a.conj().T)) > HERMITIAN_TOL:
        raise ValueError("matrix is not Hermitian within tolerance")
    a = 0.5 * (a + a.conj().T)  # kill round-off asymmetry before rotating
    n = a.shape[0]
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = a - np.diag(np.diag(a))
        if np.max(np.abs(off)) <= _JACOBI_OFF_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-16:
                    _rotate(a, p, q)
    return np.sort(np.diag(a).real)[::-1]
