"""Single-qubit Kraus channels and their uniform application to registers.

Each channel is a finite set of 2x2 operators E_mu with
sum_mu E_mu^dag E_mu = identity; applying a channel uniformly means every
qubit of the register is subjected to the same single-qubit map.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import num_qubits, validate_density_matrix

COMPLETENESS_TOL = 1e-12


class CompletenessError(ValueError):
    """Kraus operators do not resolve the identity."""


@dataclass(frozen=True)
class KrausChannel:
    kind: str
    p: float
    operators: tuple


def _check_strength(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"channel strength must be in [0, 1], got {p}")
    return p


def depolarizing(p: float) -> KrausChannel:
    """Isotropic noise toward the maximally mixed state.

    E0 = sqrt(1 - 3p/4) I,  E1 = sqrt(p/4) X,
    E2 = sqrt(p/4) Y,       E3 = sqrt(p/4) Z.
    """
    p = _check_strength(p)
    eye = np.eye(2, dtype=complex)
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    ops = (
        np.sqrt(1 - 3 * p / 4) * eye,
        np.sqrt(p / 4) * sx,
        np.sqrt(p / 4) * sy,
        np.sqrt(p / 4) * sz,
    )
    return KrausChannel("depolarizing", p, ops)


def amplitude_damping(p: float) -> KrausChannel:
    """Decay |1> -> |0> with probability p.

    E0 = |0><0| + sqrt(1-p) |1><1|,  E1 = sqrt(p) |0><1|.
    """
    p = _check_strength(p)
    e0 = np.array([[1, 0], [0, np.sqrt(1 - p)]], dtype=complex)
    e1 = np.array([[0, np.sqrt(p)], [0, 0]], dtype=complex)
    return KrausChannel("amplitude_damping", p, (e0, e1))


def phase_damping(p: float) -> KrausChannel:
    """Loss of coherence without population transfer.

    E0 = sqrt(1-p) I,  E1 = sqrt(p) |0><0|,  E2 = sqrt(p) |1><1|.
    """
    p = _check_strength(p)
    e0 = np.sqrt(1 - p) * np.eye(2, dtype=complex)
    e1 = np.sqrt(p) * np.array([[1, 0], [0, 0]], dtype=complex)
    e2 = np.sqrt(p) * np.array([[0, 0], [0, 1]], dtype=complex)
    return KrausChannel("phase_damping", p, (e0, e1, e2))


def custom_channel(operators, p: float = 0.0, kind: str = "custom") -> KrausChannel:
    """Wrap user-supplied 2x2 operators; completeness is checked on use."""
    ops = tuple(np.asarray(op, dtype=complex) for op in operators)
    if not ops:
        raise ValueError("a channel needs at least one Kraus operator")
    for op in ops:
        if op.shape != (2, 2):
            raise ValueError(f"Kraus operators must be 2x2, got shape {op.shape}")
    return KrausChannel(kind, _check_strength(p), ops)


def damping_rate_to_p(gamma: float, t: float) -> float:
    """Decay probability p = 1 - exp(-gamma t / 2) for rate gamma and time t."""
    gamma, t = float(gamma), float(t)
    if gamma < 0 or t < 0:
        raise ValueError(f"gamma and t must be nonnegative, got {gamma}, {t}")
    return 1.0 - np.exp(-gamma * t / 2)


def completeness_defect(ch: KrausChannel) -> float:
    """max |sum_mu E_mu^dag E_mu - I| entrywise."""
    total = np.zeros((2, 2), dtype=complex)
    for op in ch.operators:
        total += op.conj().T @ op
    return float(np.max(np.abs(total - np.eye(2))))


def validate_channel(ch: KrausChannel, tol: float = COMPLETENESS_TOL) -> float:
    """Return the completeness defect, raising if it exceeds ``tol``."""
    defect = completeness_defect(ch)
    if defect > tol:
        raise CompletenessError(
            f"{ch.kind} channel violates completeness: max deviation {defect:.3e}"
        )
    return defect


def apply_uniform(rho, ch: KrausChannel, *, validate_inputs: bool = True) -> np.ndarray:
    """Apply the single-qubit channel to every qubit of ``rho`` independently.

    Channels on distinct qubits commute, so the map is evaluated one qubit
    at a time instead of summing all len(ops)^N Kraus strings.
    """
    rho = np.asarray(rho, dtype=complex)
    if validate_inputs:
        validate_channel(ch)
        validate_density_matrix(rho)
    n = num_qubits(rho.shape[0])
    out = rho
    for q in range(n):
        left = np.eye(2**q)
        right = np.eye(2 ** (n - q - 1))
        acc = np.zeros_like(out)
        for op in ch.operators:
            lifted = np.kron(left, np.kron(op, right))
            acc += lifted @ out @ lifted.conj().T
        out = acc
    return out
