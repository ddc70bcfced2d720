"""
Linear algebra module.

Dense complex matrices and vectors for the 2x2/4x4 objects, the matrix
exponential, the Jacobi eigensolver and the JSON matrix schema.
"""

from pt_naimark.src.linalg.matrix_ops import (
    DEFAULT_TOL,
    I2,
    I4,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    MatrixReport,
    as_cmatrix,
    as_cvector,
    check_identity,
    dagger,
    expm,
    frozen,
    hermitian_eigen,
    identity,
    is_hermitian,
    is_psd,
    is_unitary,
    kron,
    matrix_checks,
    max_abs_diff,
    max_entry,
)
from pt_naimark.src.linalg.serialization import (
    MatrixDocument,
    matrices_from_json,
    matrices_to_json,
    matrix_from_dict,
    matrix_to_dict,
)

__all__ = [
    'DEFAULT_TOL',
    'I2',
    'I4',
    'SIGMA_X',
    'SIGMA_Y',
    'SIGMA_Z',
    'MatrixReport',
    'MatrixDocument',
    'as_cmatrix',
    'as_cvector',
    'check_identity',
    'dagger',
    'expm',
    'frozen',
    'hermitian_eigen',
    'identity',
    'is_hermitian',
    'is_psd',
    'is_unitary',
    'kron',
    'matrix_checks',
    'max_abs_diff',
    'max_entry',
    'matrices_from_json',
    'matrices_to_json',
    'matrix_from_dict',
    'matrix_to_dict',
]
