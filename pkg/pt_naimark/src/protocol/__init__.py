"""
Protocol module.

Two-qubit state preparation, the Sigma_1/Sigma_2 two-step measurement and the
geometric/timing analysis of the vanishing-passage regime.
"""

from pt_naimark.src.protocol.state import (
    BOLD_P_MINUS,
    BOLD_P_PLUS,
    E_MINUS,
    E_PLUS,
    P_MINUS,
    P_PLUS,
    SIGMA_1,
    SIGMA_2,
    TwoQubitState,
    evolve_state,
    prepare_initial,
    spin_expectations,
)
from pt_naimark.src.protocol.measurement import (
    MeasurementRecord,
    geodesic_distance,
    hermitian_picture_distance,
    run_protocol,
    subsystem_distance,
)
from pt_naimark.src.protocol.regime import (
    ANALYSIS_COLUMNS,
    REGIME_COLUMNS,
    RegimeReport,
    analysis_record,
    energy_moments,
    regime_frame,
    regime_report,
    regime_row,
)

__all__ = [
    'ANALYSIS_COLUMNS',
    'BOLD_P_MINUS',
    'BOLD_P_PLUS',
    'E_MINUS',
    'E_PLUS',
    'P_MINUS',
    'P_PLUS',
    'REGIME_COLUMNS',
    'SIGMA_1',
    'SIGMA_2',
    'MeasurementRecord',
    'RegimeReport',
    'TwoQubitState',
    'analysis_record',
    'energy_moments',
    'evolve_state',
    'geodesic_distance',
    'hermitian_picture_distance',
    'prepare_initial',
    'regime_frame',
    'regime_report',
    'regime_row',
    'run_protocol',
    'spin_expectations',
    'subsystem_distance',
]
