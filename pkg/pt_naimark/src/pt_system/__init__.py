"""
PT system module.

The PT-symmetric Hamiltonian family, its biorthogonal eigensystem and metric,
the non-unitary evolution and the brachistochrone passage time.
"""

from pt_naimark.src.pt_system.params import PTParams
from pt_naimark.src.pt_system.system import (
    PTSystem,
    build_system,
    eigenvector,
    hamiltonian,
    mapped_spin_operator,
    metric,
    pt_inner,
    system_residuals,
)
from pt_naimark.src.pt_system.evolution import (
    PSI_I,
    TRAJECTORY_COLUMNS,
    Trajectory,
    evolution,
    final_state,
    first_flip_time,
    passage_times,
    subsystem_state,
    trajectory,
    trajectory_frame,
)

__all__ = [
    'PTParams',
    'PTSystem',
    'PSI_I',
    'TRAJECTORY_COLUMNS',
    'Trajectory',
    'build_system',
    'eigenvector',
    'evolution',
    'final_state',
    'first_flip_time',
    'hamiltonian',
    'mapped_spin_operator',
    'metric',
    'passage_times',
    'pt_inner',
    'subsystem_state',
    'system_residuals',
    'trajectory',
    'trajectory_frame',
]
