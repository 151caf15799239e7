"""Reference multiqubit pure states and density-matrix utilities.

Convention: computational basis, qubit 0 is the most significant bit of the
basis index, and |0> is the sigma_z = +1 eigenstate. Constructors return
real nonnegative amplitudes so snapshots are deterministic.
"""

from __future__ import annotations

import numpy as np

from .linalg import HERMITICITY_TOL, PSD_TOL, hermiticity_defect

STATE_NORM_TOL = 1e-10
TRACE_TOL = 1e-10


def num_qubits(dim: int) -> int:
    """Number of qubits for a register of dimension ``dim`` (a power of two)."""
    dim = int(dim)
    n = dim.bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def w_state(n: int) -> np.ndarray:
    """Equal superposition of the n single-excitation basis states."""
    if n < 2:
        raise ValueError(f"w_state requires n >= 2, got {n}")
    amp = np.zeros(2**n, dtype=complex)
    amp[[1 << k for k in range(n)]] = 1 / np.sqrt(n)
    return amp


def ghz_state(n: int) -> np.ndarray:
    """(|0...0> + |1...1>)/sqrt(2)."""
    if n < 2:
        raise ValueError(f"ghz_state requires n >= 2, got {n}")
    amp = np.zeros(2**n, dtype=complex)
    amp[0] = amp[-1] = 1 / np.sqrt(2)
    return amp


def dicke_state(n: int, k: int) -> np.ndarray:
    """Equal superposition of all k-excitation basis states of n qubits."""
    if n < 1:
        raise ValueError(f"dicke_state requires n >= 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"excitation count must satisfy 0 <= k <= {n}, got {k}")
    hits = [i for i in range(2**n) if i.bit_count() == k]
    amp = np.zeros(2**n, dtype=complex)
    amp[hits] = 1 / np.sqrt(len(hits))
    return amp


def zero_state(n: int) -> np.ndarray:
    """Product state |0...0>, the shot-noise baseline."""
    if n < 1:
        raise ValueError(f"zero_state requires n >= 1, got {n}")
    amp = np.zeros(2**n, dtype=complex)
    amp[0] = 1.0
    return amp


def _check_normalized(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise ValueError(f"state is not normalized: ||psi|| = {norm!r}")
    return psi


def density_from_pure(psi) -> np.ndarray:
    """rho = |psi><psi| for a normalized amplitude vector."""
    psi = _check_normalized(psi)
    return np.outer(psi, psi.conj())


def purity(rho) -> float:
    """trace(rho^2), in (0, 1]; equals 1 exactly for pure states."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.trace(rho @ rho).real)


def validate_density_matrix(
    rho,
    *,
    trace_tol: float = TRACE_TOL,
    herm_tol: float = HERMITICITY_TOL,
    psd_tol: float = PSD_TOL,
) -> np.ndarray:
    """Check trace one, hermiticity and positivity; returns the validated array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    num_qubits(rho.shape[0])
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"density matrix trace is {tr}, expected 1")
    defect = hermiticity_defect(rho)
    if defect > herm_tol:
        raise ValueError(f"density matrix is not Hermitian: defect {defect:.3e}")
    lo = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2).min())
    if lo < -psd_tol:
        raise ValueError(f"density matrix has negative eigenvalue {lo:.3e}")
    return rho
