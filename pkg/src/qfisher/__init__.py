"""Spin-rotation quantum Fisher information of small qubit registers under
single-qubit decoherence channels.

Modules: ``linalg`` (dense complex kernel), ``states`` (W/GHZ/Dicke/product
constructors), ``collective`` (angular-momentum operators), ``channels``
(Kraus channels and uniform application), ``qfi`` (the spectral sensitivity
engine with its two summation conventions), ``closed_forms`` (analytic
oracles for the damped three-qubit W state), ``sweep`` and ``cli``
(strength sweeps, CSV/SVG emission, convention-gap reports).
"""

from .channels import (
    CompletenessError,
    KrausChannel,
    amplitude_damping,
    apply_uniform,
    completeness_defect,
    custom_channel,
    damping_rate_to_p,
    depolarizing,
    phase_damping,
    validate_channel,
)
from .closed_forms import (
    PURE_W3_MEAN_QFI,
    adc_mean_qfi_paper,
    pdc_mean_qfi_paper,
    pure_w_mean_qfi,
    w3_adc_eigenvalues,
    w3_dpc_eigenvalues,
    w3_pdc_eigenvalues,
)
from .collective import as_direction, collective_operator, pauli
from .linalg import EigenDecomposition, hermitian_eig, is_psd
from .qfi import (
    DEFAULT_EPSILON,
    OracleError,
    QfiResult,
    SummationMode,
    c_matrix,
    c_matrix_from_spectrum,
    fidelity_qfi_oracle,
    max_mean_qfi,
    pure_state_qfi,
    qcrb,
    qfi_along,
    uhlmann_fidelity,
)
from .states import (
    density_from_pure,
    dicke_state,
    ghz_state,
    num_qubits,
    purity,
    validate_density_matrix,
    w_state,
    zero_state,
)
from .sweep import (
    EmptyResultError,
    SweepConfig,
    SweepRow,
    discrepancy_report,
    emit_csv,
    emit_svg,
    gap_summary,
    load_channel_file,
    make_state,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "CompletenessError",
    "DEFAULT_EPSILON",
    "EigenDecomposition",
    "EmptyResultError",
    "KrausChannel",
    "OracleError",
    "PURE_W3_MEAN_QFI",
    "QfiResult",
    "SummationMode",
    "SweepConfig",
    "SweepRow",
    "adc_mean_qfi_paper",
    "amplitude_damping",
    "apply_uniform",
    "as_direction",
    "c_matrix",
    "c_matrix_from_spectrum",
    "collective_operator",
    "completeness_defect",
    "custom_channel",
    "damping_rate_to_p",
    "density_from_pure",
    "depolarizing",
    "dicke_state",
    "discrepancy_report",
    "emit_csv",
    "emit_svg",
    "fidelity_qfi_oracle",
    "gap_summary",
    "ghz_state",
    "hermitian_eig",
    "is_psd",
    "load_channel_file",
    "make_state",
    "max_mean_qfi",
    "num_qubits",
    "pauli",
    "pdc_mean_qfi_paper",
    "phase_damping",
    "pure_state_qfi",
    "pure_w_mean_qfi",
    "purity",
    "qcrb",
    "qfi_along",
    "run_sweep",
    "uhlmann_fidelity",
    "validate_channel",
    "validate_density_matrix",
    "w3_adc_eigenvalues",
    "w3_dpc_eigenvalues",
    "w3_pdc_eigenvalues",
    "w_state",
    "zero_state",
]
