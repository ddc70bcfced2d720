"""
Naimark module.

Auxiliary POVM, its explicit 4x4 Naimark dilation, the dilated Hamiltonian and
evolution, and a general completion routine for rank-one POVMs.
"""

from pt_naimark.src.naimark.povm import Povm, build_povm, rank_one_element, validate_povm
from pt_naimark.src.naimark.dilation import (
    DilatedSystem,
    ancilla_closed_form,
    ancilla_state,
    dilate,
    dilated_evolution,
    dilated_evolution_from_subsystem,
    dilation_residuals,
    evolution_blocks,
    lambda_omega,
    spectral_evolution,
)
from pt_naimark.src.naimark.general import (
    general_naimark,
    random_rank_one_povm,
    row_space_projector,
)

__all__ = [
    'Povm',
    'DilatedSystem',
    'ancilla_closed_form',
    'ancilla_state',
    'build_povm',
    'dilate',
    'dilated_evolution',
    'dilated_evolution_from_subsystem',
    'dilation_residuals',
    'evolution_blocks',
    'general_naimark',
    'lambda_omega',
    'random_rank_one_povm',
    'rank_one_element',
    'row_space_projector',
    'spectral_evolution',
    'validate_povm',
]
