"""
Utilities module.

Error types shared by every package module, plus the CSV/JSON writers used by the CLI.
"""

from pt_naimark.src.utils.errors import (
    ContractViolation,
    InvariantViolation,
    ParameterDomainError,
    PTNaimarkError,
)
from pt_naimark.src.utils.output import (
    FLOAT_FORMAT,
    emit,
    frame_to_csv,
    frame_to_json,
    record_to_json,
)

__all__ = [
    'PTNaimarkError',
    'ParameterDomainError',
    'ContractViolation',
    'InvariantViolation',
    'FLOAT_FORMAT',
    'emit',
    'frame_to_csv',
    'frame_to_json',
    'record_to_json',
]
