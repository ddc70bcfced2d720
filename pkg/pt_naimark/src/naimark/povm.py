import math
from dataclasses import dataclass

import numpy as np

from pt_naimark.src.linalg import (
    DEFAULT_TOL,
    as_cmatrix,
    check_identity,
    frozen,
    hermitian_eigen,
    is_hermitian,
    max_abs_diff,
    max_entry,
)
from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.pt_system import PTSystem
from pt_naimark.src.utils.errors import ContractViolation, InvariantViolation

logger = get_logger()

POVM_TOL = 1e-12


@dataclass(frozen=True)
class Povm:
    elements: tuple[np.ndarray, ...]

    @property
    def count(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def total(self) -> np.ndarray:
        return frozen(sum(np.asarray(e) for e in self.elements))


def rank_one_element(x, weight: float = 1.0) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    return frozen(weight * np.outer(x, np.conjugate(x)))


def validate_povm(elements, tol: float = DEFAULT_TOL) -> Povm:
    """Check that ``elements`` are Hermitian, PSD, rank one and resolve the identity."""
    elements = tuple(as_cmatrix(e) for e in elements)
    if not elements:
        raise ContractViolation('A POVM needs at least one element')
    dim = elements[0].shape[0]
    for k, element in enumerate(elements):
        if element.shape != (dim, dim):
            raise ContractViolation(f'POVM element {k} has shape {element.shape}')
        if not is_hermitian(element, tol):
            raise ContractViolation(f'POVM element {k} is not Hermitian')
        values, _ = hermitian_eigen(element, tol)
        if values[-1] < -tol:
            raise ContractViolation(f'POVM element {k} is not positive semidefinite')
        if dim > 1 and values[1] > tol:
            raise ContractViolation(
                f'POVM element {k} is not rank one (second eigenvalue {values[1]:.3e})'
            )
    povm = Povm(elements=elements)
    completeness = max_abs_diff(povm.total(), np.eye(dim))
    if completeness > tol:
        raise ContractViolation(f'POVM elements miss the identity by {completeness:.3e}')
    return povm


def build_povm(sys: PTSystem) -> Povm:
    """Rank-one POVM over the eigenvectors of H and H^dagger, all scaled by f^2.

    Order: A1, A2 from |E+(alpha)>, |E-(alpha)>; A3, A4 from |E+(-alpha)>, |E-(-alpha)>.
    """
    f2 = sys.params.f**2
    columns = [sys.Psi[:, 0], sys.Psi[:, 1], sys.Xi[:, 0], sys.Xi[:, 1]]
    elements = [rank_one_element(x, f2) for x in columns]
    # element entries grow like 1/cos(alpha) near the exceptional point
    scale = max(1.0, max(max_entry(e) for e in elements))
    try:
        povm = validate_povm(elements, POVM_TOL * scale)
    except ContractViolation as e:
        raise InvariantViolation('povm_elements', math.inf, POVM_TOL * scale) from e
    error = check_identity('povm_completeness', povm.total(), np.eye(2), POVM_TOL)
    logger.debug(f'POVM built, completeness error {error:.3e}')
    return povm
