"""Analytic spectra and sensitivity curves for the damped three-qubit W state.

These closed forms are the oracle the numeric pipeline is validated
against: density-matrix eigenvalues of the W3 state after each of the
three standard channels, and the piecewise mean-QFI curves that the
support-restricted summation reproduces.
"""

from __future__ import annotations

import numpy as np

PURE_W3_MEAN_QFI = 7.0 / 3.0


def _check_strength(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"channel strength must be in [0, 1], got {p}")
    return p


def w3_dpc_eigenvalues(p: float) -> np.ndarray:
    """Eight eigenvalues of the depolarized W3 density matrix, with multiplicity."""
    p = _check_strength(p)
    l1 = (-2 + p) ** 2 * p / 8
    l2 = -(-2 + p) * p**2 / 8
    l3 = p * (8 - 6 * p + p**2) / 24
    l5 = p * (16 - 24 * p + 11 * p**2) / 24
    l6 = (24 - 52 * p + 42 * p**2 - 11 * p**3) / 24
    l7 = (4 * p - p**3) / 24
    return np.array([l1, l2, l3, l3, l5, l6, l7, l7])


def w3_adc_eigenvalues(p: float) -> np.ndarray:
    """Amplitude damping leaves a rank-two state: {1-p, p}, zeros padded."""
    p = _check_strength(p)
    return np.array([1 - p, p, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])


def w3_pdc_eigenvalues(p: float) -> np.ndarray:
    """Phase damping leaves rank three: {(2p-p^2)/3 twice, (3-4p+2p^2)/3}, zeros padded."""
    p = _check_strength(p)
    pair = (2 * p - p**2) / 3
    single = (3 - 4 * p + 2 * p**2) / 3
    return np.array([pair, pair, single, 0.0, 0.0, 0.0, 0.0, 0.0])


def adc_mean_qfi_paper(p: float) -> float:
    """Support-restricted mean QFI of W3 under amplitude damping.

    7/3 for the pure state at p = 0, then the parabola (1-2p)^2: a sudden
    drop to shot noise, a zero at p = 1/2, and recovery to shot noise at p = 1.
    """
    p = _check_strength(p)
    if p == 0.0:
        return PURE_W3_MEAN_QFI
    return (1 - 2 * p) ** 2


def pdc_mean_qfi_paper(p: float) -> float:
    """Support-restricted mean QFI of W3 under phase damping.

    7/3 at p = 0 and identically zero for every p > 0 (sudden death).
    """
    p = _check_strength(p)
    if p == 0.0:
        return PURE_W3_MEAN_QFI
    return 0.0


def pure_w_mean_qfi(n: int) -> float:
    """Mean QFI 3 - 2/n of the pure n-qubit W state (from 4 Var(J_x) = 3n - 2)."""
    if n < 2:
        raise ValueError(f"W states need n >= 2, got {n}")
    return 3.0 - 2.0 / n
