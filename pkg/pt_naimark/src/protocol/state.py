"""
Two-qubit reading of the dilated system.

Basis order is (e+ (x) e+, e+ (x) e-, e- (x) e+, e- (x) e-): the first factor
selects brachistochrone (e+) or ancilla (e-) and is measured by Sigma_1, the
second is the internal spin measured by Sigma_2.
"""

from dataclasses import dataclass

import numpy as np

from pt_naimark.src.linalg import I2, SIGMA_Z, as_cvector, frozen, kron
from pt_naimark.src.naimark import DilatedSystem, dilated_evolution
from pt_naimark.src.pt_system import PSI_I, PTSystem
from pt_naimark.src.utils.errors import ContractViolation

NORM_TOL = 1e-12

E_PLUS = as_cvector([1, 0])
E_MINUS = as_cvector([0, 1])
P_PLUS = frozen(np.outer(E_PLUS, E_PLUS))
P_MINUS = frozen(np.outer(E_MINUS, E_MINUS))
BOLD_P_PLUS = kron(P_PLUS, I2)
BOLD_P_MINUS = kron(P_MINUS, I2)
SIGMA_1 = kron(SIGMA_Z, I2)
SIGMA_2 = kron(I2, SIGMA_Z)


@dataclass(frozen=True)
class TwoQubitState:
    vec: np.ndarray
    psi_part: np.ndarray
    chi_part: np.ndarray

    @classmethod
    def from_vector(cls, vec, tol: float = NORM_TOL) -> 'TwoQubitState':
        vec = as_cvector(vec)
        if vec.shape != (4,):
            raise ContractViolation(f'A two-qubit state needs 4 components, got {vec.shape}')
        norm = float(np.linalg.norm(vec))
        if abs(norm - 1) > tol:
            raise ContractViolation(f'Two-qubit state is not normalized (norm {norm!r})')
        return cls(vec=vec, psi_part=frozen(vec[:2]), chi_part=frozen(vec[2:]))

    @classmethod
    def from_parts(cls, psi, chi, tol: float = NORM_TOL) -> 'TwoQubitState':
        """vec = e+ (x) psi + e- (x) chi."""
        vec = np.kron(E_PLUS, as_cvector(psi)) + np.kron(E_MINUS, as_cvector(chi))
        return cls.from_vector(vec, tol)

    @property
    def weights(self) -> tuple[float, float]:
        """(|psi part|^2, |chi part|^2)."""
        return (
            float(np.vdot(self.psi_part, self.psi_part).real),
            float(np.vdot(self.chi_part, self.chi_part).real),
        )


def prepare_initial(sys: PTSystem) -> TwoQubitState:
    """phi_I = g (psi_I, eta psi_I) with g = cos(alpha)/sqrt(2)."""
    g = sys.params.g
    return TwoQubitState.from_parts(g * PSI_I, g * (sys.eta @ PSI_I))


def evolve_state(state: TwoQubitState, ds: DilatedSystem, t: float) -> TwoQubitState:
    return TwoQubitState.from_vector(dilated_evolution(ds, t) @ state.vec)


def spin_expectations(state: TwoQubitState) -> tuple[float, float]:
    """(<Sigma_1>, <Sigma_2>) with Sigma_1 = sigma_z (x) I2 and Sigma_2 = I2 (x) sigma_z."""
    v = state.vec
    return (
        float(np.vdot(v, SIGMA_1 @ v).real),
        float(np.vdot(v, SIGMA_2 @ v).real),
    )
