"""Spin-rotation quantum Fisher information from the spectral decomposition.

The directional sensitivity matrix is

    C[k, l] = sum over admitted ordered pairs i != j of
              (lam_i - lam_j)^2 / (lam_i + lam_j)
              * ( <i|J_k|j><j|J_l|i> + <i|J_l|j><j|J_k|i> )

over eigenpairs (lam_i, |i>) of the density matrix, with J_k the collective
operators along x, y, z. Its largest eigenvalue c_max is the maximal QFI
over rotation axes, and c_max / N is the mean QFI per qubit.

Which pairs are "admitted" is ambiguous for rank-deficient states, so the
summation mode is an explicit required argument everywhere:

* ``FULL_SPECTRUM`` admits every pair with lam_i + lam_j > epsilon,
  including support-kernel pairs; the result is continuous in the noise
  strength and agrees with the fidelity-based oracle.
* ``SUPPORT_ONLY`` admits only pairs with both eigenvalues above epsilon,
  except for rank-one (pure) states where the full sum is used; damped
  W states then show sudden drops and sudden death of sensitivity.

Both modes coincide on full-rank states.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .collective import X_AXIS, Y_AXIS, Z_AXIS, as_direction, collective_operator
from .linalg import PSD_TOL, hermitian_eig, hermiticity_defect
from .states import TRACE_TOL, _check_normalized, num_qubits

DEFAULT_EPSILON = 1e-10
CLASSIFICATION_TOL = 1e-6

BELOW_SHOT_NOISE = "below_shot_noise"
SHOT_NOISE = "shot_noise"
USEFUL_ENTANGLED = "useful_entangled"
HEISENBERG = "heisenberg"


class SummationMode(Enum):
    """Pair-admission rule for the spectral sum; values are the CLI tokens."""

    FULL_SPECTRUM = "full"
    SUPPORT_ONLY = "paper"


class OracleError(RuntimeError):
    """The fidelity-based cross-check could not be evaluated."""


@dataclass(frozen=True)
class QfiResult:
    c_matrix: np.ndarray
    c_max: float
    f_max: float
    mean_f: float
    mode: SummationMode
    epsilon: float
    classification: str


def _check_epsilon(epsilon: float) -> float:
    epsilon = float(epsilon)
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return epsilon


def _validated_spectrum(rho):
    """Shared validation + eigendecomposition for the engine entry points."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix trace is {tr}, expected 1")
    if hermiticity_defect(rho) > 1e-10:
        raise ValueError("density matrix is not Hermitian")
    eig = hermitian_eig(rho)
    if eig.eigenvalues.min() < -PSD_TOL:
        raise ValueError(
            f"density matrix has negative eigenvalue {eig.eigenvalues.min():.3e}"
        )
    return eig


def c_matrix_from_spectrum(
    eigenvalues,
    eigenvectors,
    mode: SummationMode,
    epsilon: float = DEFAULT_EPSILON,
) -> np.ndarray:
    """Sensitivity matrix from an explicit eigendecomposition.

    Eigenvalues at or below ``epsilon`` are clamped to zero before the mode
    filter; pairs whose denominator lam_i + lam_j <= epsilon are always
    skipped. Returns a real symmetric 3x3 array.
    """
    epsilon = _check_epsilon(epsilon)
    if not isinstance(mode, SummationMode):
        raise ValueError(f"mode must be a SummationMode, got {mode!r}")
    lam = np.asarray(eigenvalues, dtype=float).copy()
    vecs = np.asarray(eigenvectors, dtype=complex)
    n = num_qubits(lam.size)
    if n < 1:
        raise ValueError("need at least one qubit")

    lam[lam <= epsilon] = 0.0
    support = lam > 0.0
    effective = mode
    if mode is SummationMode.SUPPORT_ONLY and int(support.sum()) == 1:
        effective = SummationMode.FULL_SPECTRUM  # rank-one: pure-state branch

    sums = lam[:, None] + lam[None, :]
    admitted = sums > epsilon
    np.fill_diagonal(admitted, False)
    if effective is SummationMode.SUPPORT_ONLY:
        admitted &= support[:, None] & support[None, :]
    weights = np.zeros_like(sums)
    np.divide((lam[:, None] - lam[None, :]) ** 2, sums, out=weights, where=admitted)

    axes = (X_AXIS, Y_AXIS, Z_AXIS)
    ms = [vecs.conj().T @ collective_operator(n, ax) @ vecs for ax in axes]
    c = np.empty((3, 3))
    for k in range(3):
        for l in range(k, 3):
            val = float(np.sum(weights * (ms[k] * ms[l].T + ms[l] * ms[k].T)).real)
            c[k, l] = c[l, k] = val
    return c


def c_matrix(rho, mode: SummationMode, epsilon: float = DEFAULT_EPSILON) -> np.ndarray:
    """Sensitivity matrix of a density matrix under the given summation mode."""
    eig = _validated_spectrum(rho)
    return c_matrix_from_spectrum(eig.eigenvalues, eig.eigenvectors, mode, epsilon)


def _classify(mean_f: float, n_qubits: int, tol: float = CLASSIFICATION_TOL) -> str:
    if abs(mean_f - n_qubits) <= tol:
        return HEISENBERG
    if mean_f > 1 + tol:
        return USEFUL_ENTANGLED
    if abs(mean_f - 1) <= tol:
        return SHOT_NOISE
    return BELOW_SHOT_NOISE


def max_mean_qfi(
    rho, mode: SummationMode, epsilon: float = DEFAULT_EPSILON
) -> QfiResult:
    """Largest eigenvalue of C, the mean QFI per qubit, and its classification."""
    rho = np.asarray(rho, dtype=complex)
    c = c_matrix(rho, mode, epsilon)
    n = num_qubits(rho.shape[0])
    c_max = float(np.linalg.eigvalsh(c)[-1])
    mean_f = c_max / n
    return QfiResult(
        c_matrix=c,
        c_max=c_max,
        f_max=c_max,
        mean_f=mean_f,
        mode=mode,
        epsilon=float(epsilon),
        classification=_classify(mean_f, n),
    )


def qfi_along(
    rho, direction, mode: SummationMode, epsilon: float = DEFAULT_EPSILON
) -> float:
    """Phase sensitivity n^T C n along one rotation axis."""
    v = as_direction(direction)
    c = c_matrix(rho, mode, epsilon)
    return float(v @ c @ v)


def pure_state_qfi(psi, direction) -> float:
    """4 Var(J_n) for a normalized pure state."""
    psi = _check_normalized(psi)
    j = collective_operator(num_qubits(psi.size), direction)
    jpsi = j @ psi
    mean = np.vdot(psi, jpsi).real
    second = np.vdot(jpsi, jpsi).real
    return 4.0 * (second - mean**2)


def qcrb(f: float, n_m: int = 1) -> float:
    """Phase-estimation lower bound 1 / sqrt(n_m * f) for n_m experiments."""
    f = float(f)
    if f <= 0:
        raise ValueError(f"QFI must be positive for a finite bound, got {f}")
    if int(n_m) < 1:
        raise ValueError(f"number of experiments must be >= 1, got {n_m}")
    return 1.0 / np.sqrt(int(n_m) * f)


def _fidelity_root(rho, sigma, neg_tol: float = 1e-12) -> float:
    """trace sqrt(sqrt(rho) sigma sqrt(rho)); squares to the Uhlmann fidelity."""
    vals, vecs = hermitian_eig(rho)
    vals = np.clip(vals, 0.0, None)
    sqrt_rho = (vecs * np.sqrt(vals)) @ vecs.conj().T
    inner = sqrt_rho @ np.asarray(sigma, dtype=complex) @ sqrt_rho
    ivals = hermitian_eig(inner).eigenvalues
    if ivals.min() < -neg_tol:
        raise OracleError(
            f"fidelity under-root eigenvalue {ivals.min():.3e} below -{neg_tol:.0e}"
        )
    return float(np.sum(np.sqrt(np.clip(ivals, 0.0, None))))


def uhlmann_fidelity(rho, sigma) -> float:
    """(trace sqrt(sqrt(rho) sigma sqrt(rho)))^2."""
    return _fidelity_root(np.asarray(rho, dtype=complex), sigma) ** 2


def fidelity_qfi_oracle(rho, direction, dphi: float = 1e-4, mix: float = 1e-6) -> float:
    """Finite-difference QFI estimate, independent of the spectral sum.

    The state is blended with the maximally mixed state (weight ``mix``) so
    the fidelity is smooth, rotated by +-dphi/2 about the given axis, and
    the QFI is read off the second-order fidelity drop:
    F ~ 8 (1 - sqrt(fidelity)) / dphi^2. Matches the FULL_SPECTRUM sum.
    """
    rho = np.asarray(rho, dtype=complex)
    if dphi <= 0:
        raise ValueError(f"dphi must be positive, got {dphi}")
    dim = rho.shape[0]
    n = num_qubits(dim)
    reg = (1 - mix) * rho + mix * np.eye(dim) / dim
    j = collective_operator(n, direction)
    jvals, jvecs = hermitian_eig(j)

    def rotated(phi):
        u = (jvecs * np.exp(-1j * jvals * phi)) @ jvecs.conj().T
        return u @ reg @ u.conj().T

    root = _fidelity_root(rotated(-dphi / 2), rotated(+dphi / 2))
    return 8.0 * (1.0 - root) / dphi**2
