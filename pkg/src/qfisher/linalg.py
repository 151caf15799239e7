"""Dense complex matrix helpers for small multiqubit operators.

Everything works on plain 2-d ``numpy`` arrays of complex numbers and is
sized for register dimensions up to a few thousand (N <= ~10 qubits).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

HERMITICITY_TOL = 1e-10
PSD_TOL = 1e-9


class EigenDecomposition(NamedTuple):
    """Complete spectrum of a Hermitian matrix.

    ``eigenvalues`` are real and sorted descending, zeros included;
    ``eigenvectors`` holds the matching unit-norm column vectors, each with
    its first nonzero component phase-fixed to be real and positive so that
    repeated runs on the same input produce identical output.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m


def _as_square(a) -> np.ndarray:
    m = _as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product; dimensions multiply."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def matmul(a, b) -> np.ndarray:
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch in matmul: {a.shape} x {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(_as_square(a)))


def add(a, b) -> np.ndarray:
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch in add: {a.shape} vs {b.shape}")
    return a + b


def scale(c, a) -> np.ndarray:
    return complex(c) * _as_matrix(a)


def hermiticity_defect(a) -> float:
    """max |A - A^dag| entrywise; 0 for an exactly Hermitian matrix."""
    a = _as_square(a)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def hermitian_eig(a, tol: float = HERMITICITY_TOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix with deterministic ordering.

    The input must be Hermitian within ``tol`` (it is symmetrized as
    (A + A^dag)/2 before factorization). The full spectrum is returned,
    including (near-)zero eigenvalues, sorted descending.
    """
    a = _as_square(a)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise ValueError(
            f"matrix is not Hermitian: max |A - A^dag| = {defect:.3e} > {tol:.3e}"
        )
    vals, vecs = np.linalg.eigh((a + a.conj().T) / 2)
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    # canonical phase: first nonzero component real and positive
    for k in range(vecs.shape[1]):
        col = vecs[:, k]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size:
            pivot = col[nz[0]]
            vecs[:, k] = col * (abs(pivot) / pivot)
    return EigenDecomposition(vals, vecs)


def is_psd(a, tol: float = PSD_TOL) -> bool:
    """True iff the smallest eigenvalue of the (Hermitian) input is >= -tol."""
    a = _as_square(a)
    vals = np.linalg.eigvalsh((a + a.conj().T) / 2)
    return bool(vals.min() >= -tol)
