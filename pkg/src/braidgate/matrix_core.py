"""Dense complex matrix primitives for small qubit operators.

Everything here works on plain ``numpy`` complex arrays.  Operators on two
qubits are 4x4 with rows/columns labelled by the pair index (i1 i2) in the
order 00, 01, 10, 11; ``braid`` representations grow them to 2^n x 2^n.
All functions are pure.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "DEFAULT_TOL",
    "default_tol",
    "I2",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "SingularMatrixError",
    "as_matrix",
    "tensor_product",
    "partial_trace",
    "partial_transpose",
    "invert",
    "eigenvalues_xtype",
    "eigenvalues_general",
    "max_norm",
    "is_xtype",
]

DEFAULT_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def default_tol() -> float:
    """Default comparison tolerance, overridable via BRAIDGATE_TOL."""
    env = os.environ.get("BRAIDGATE_TOL")
    return float(env) if env else DEFAULT_TOL


class SingularMatrixError(ValueError):
    """Raised when a matrix is singular within the detection threshold."""


def as_matrix(m) -> np.ndarray:
    """Coerce to a square complex ndarray, rejecting non-finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def max_norm(m) -> float:
    """Entrywise max-abs norm used for all residual reporting."""
    return float(np.max(np.abs(m))) if np.asarray(m).size else 0.0


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product with the (i*dim_b + k) row convention."""
    return np.kron(as_matrix(a), as_matrix(b))


def _as_two_qubit(r) -> np.ndarray:
    r = as_matrix(r)
    if r.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit operator, got {r.shape}")
    return r


def partial_trace(r, qubit: int) -> np.ndarray:
    """Trace a 4x4 operator over one qubit, returning a 2x2 matrix.

    ``qubit=1`` sums over the first factor, ``qubit=2`` over the second:
    (tr2 R)[i, j] = sum_k R[(i k), (j k)].
    """
    r4 = _as_two_qubit(r).reshape(2, 2, 2, 2)
    if qubit == 1:
        return np.einsum("kikj->ij", r4)
    if qubit == 2:
        return np.einsum("ikjk->ij", r4)
    raise ValueError("qubit index must be 1 or 2")


def partial_transpose(r, qubit: int) -> np.ndarray:
    """Transpose the row/column indices of one qubit factor.

    (Theta_1 R)[(i1 i2), (j1 j2)] = R[(j1 i2), (i1 j2)], and Theta_2
    analogously; Theta_1 composed with Theta_2 is the full transpose.
    """
    r4 = _as_two_qubit(r).reshape(2, 2, 2, 2)
    if qubit == 1:
        return np.einsum("ikjl->jkil", r4).reshape(4, 4)
    if qubit == 2:
        return np.einsum("kilj->kjli", r4).reshape(4, 4)
    raise ValueError("qubit index must be 1 or 2")


def invert(m) -> np.ndarray:
    """Matrix inverse with an explicit singularity check.

    A matrix counts as singular when |det| < 1e-12 * max_norm^dim, which at
    catalog parameters is far below any admissible draw.
    """
    a = as_matrix(m)
    det = np.linalg.det(a)
    scale = max(max_norm(a), 1.0)
    if abs(det) < 1e-12 * scale ** a.shape[0]:
        raise SingularMatrixError(f"matrix is singular (|det| = {abs(det):.3e})")
    return np.linalg.inv(a)


def eigenvalues_xtype(h) -> tuple[complex, complex, complex, complex]:
    """Closed-form eigenvalues of an X-patterned operator.

    Returns (lam1_plus, lam1_minus, lam2_plus, lam2_minus) where the first
    pair comes from the outer (h1, h2, h7, h8) block and the second from the
    inner (h3, h4, h5, h6) block.  Square roots take the numpy principal
    branch, which fixes the +/- labels.
    """
    h1, h2, h3, h4, h5, h6, h7, h8 = (complex(v) for v in _h_tuple(h))
    d1 = np.sqrt(complex((h1 - h8) ** 2 + 4 * h2 * h7))
    d2 = np.sqrt(complex((h3 - h6) ** 2 + 4 * h4 * h5))
    return (
        (h1 + h8 + d1) / 2,
        (h1 + h8 - d1) / 2,
        (h3 + h6 + d2) / 2,
        (h3 + h6 - d2) / 2,
    )


def eigenvalues_general(m) -> np.ndarray:
    """Eigenvalue multiset from the general-purpose dense solver.

    Kept separate from :func:`eigenvalues_xtype` so the closed form can be
    cross-checked against an independent route.
    """
    return np.linalg.eigvals(as_matrix(m))


def is_xtype(r, tol: float | None = None) -> bool:
    """True when all eight off-pattern entries of a 4x4 matrix vanish."""
    r = _as_two_qubit(r)
    tol = default_tol() if tol is None else tol
    mask = np.array(
        [
            [False, True, True, False],
            [True, False, False, True],
            [True, False, False, True],
            [False, True, True, False],
        ]
    )
    return bool(np.all(np.abs(r[mask]) <= tol))


def _h_tuple(h):
    """Accept an XTypeParams-like object, mapping, or length-8 sequence."""
    if hasattr(h, "as_tuple"):
        return h.as_tuple()
    if isinstance(h, dict):
        return tuple(h[f"h{k}"] for k in range(1, 9))
    t = tuple(h)
    if len(t) != 8:
        raise ValueError("expected eight X-type parameters")
    return t
