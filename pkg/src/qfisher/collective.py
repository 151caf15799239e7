"""Collective angular-momentum operators on qubit registers.

J_n = sum_q (n_x sigma_x + n_y sigma_y + n_z sigma_z)^(q) / 2, each Pauli
acting on qubit q and padded with identities elsewhere.
"""

from __future__ import annotations

import numpy as np

DIRECTION_TOL = 1e-12

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

X_AXIS = (1.0, 0.0, 0.0)
Y_AXIS = (0.0, 1.0, 0.0)
Z_AXIS = (0.0, 0.0, 1.0)


def pauli(axis: str) -> np.ndarray:
    """2x2 Pauli matrix; sigma_z = diag(1, -1) with |0> the +1 eigenstate."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"unknown axis {axis!r}, expected 'x', 'y' or 'z'") from None


def as_direction(d) -> np.ndarray:
    """Validate and return a unit 3-vector as a float array."""
    v = np.asarray(d, dtype=float).reshape(-1)
    if v.size != 3:
        raise ValueError(f"direction must have 3 components, got {v.size}")
    if abs(v @ v - 1.0) > DIRECTION_TOL:
        raise ValueError(f"direction must be a unit vector, got |n|^2 = {v @ v!r}")
    return v


def collective_operator(n_qubits: int, direction) -> np.ndarray:
    """Hermitian J_n of dimension 2^n_qubits for a unit direction n."""
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be >= 1, got {n_qubits}")
    v = as_direction(direction)
    single = (v[0] * _PAULI["x"] + v[1] * _PAULI["y"] + v[2] * _PAULI["z"]) / 2
    dim = 2**n_qubits
    total = np.zeros((dim, dim), dtype=complex)
    for q in range(n_qubits):
        lifted = np.kron(np.eye(2**q), np.kron(single, np.eye(2 ** (n_qubits - q - 1))))
        total += lifted
    return total
