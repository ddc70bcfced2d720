"""
Closed-form construction of the PT-symmetric two-level system.

The Hamiltonian, its biorthogonal eigenvector matrices, the metric, the
square-root metric and the Hermitian equivalent are all written down from
closed forms and then cross-checked against each other before a
:class:`PTSystem` is handed out.
"""

import math
from dataclasses import dataclass

import numpy as np

from pt_naimark.src.linalg import (
    DEFAULT_TOL,
    I2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    as_cvector,
    check_identity,
    dagger,
    frozen,
    max_entry,
)
from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.pt_system.params import PTParams
from pt_naimark.src.utils.errors import ContractViolation

logger = get_logger()


@dataclass(frozen=True)
class PTSystem:
    params: PTParams
    H: np.ndarray
    Hdag: np.ndarray
    Epair: tuple[float, float]
    Psi: np.ndarray
    Xi: np.ndarray
    eta: np.ndarray
    eta_inv: np.ndarray
    rho: np.ndarray
    rho_inv: np.ndarray
    h: np.ndarray
    Phi: np.ndarray

    @property
    def E_tilde(self) -> np.ndarray:
        return frozen(np.diag(self.Epair))


def hamiltonian(params: PTParams) -> np.ndarray:
    sa = math.sin(params.alpha)
    return frozen(params.E0 * I2 + params.s * np.array([[1j * sa, 1], [1, -1j * sa]]))


def eigenvector(alpha: float, sign: int) -> np.ndarray:
    """|E+(alpha)> for sign=+1 and |E-(alpha)> for sign=-1, phases exactly as written.

    |E+> = e^{i alpha/2} (1, e^{-i alpha}) / sqrt(2 cos alpha)
    |E-> = i e^{-i alpha/2} (1, -e^{i alpha}) / sqrt(2 cos alpha)
    """
    norm = math.sqrt(2 * math.cos(alpha))
    if sign > 0:
        return as_cvector(np.exp(0.5j * alpha) * np.array([1, np.exp(-1j * alpha)]) / norm)
    return as_cvector(1j * np.exp(-0.5j * alpha) * np.array([1, -np.exp(1j * alpha)]) / norm)


def metric(alpha: float, inverse: bool = False) -> np.ndarray:
    """eta = e^{beta sigma_y} = (I + sin(alpha) sigma_y) / cos(alpha); inverse flips the sign of alpha."""
    sa = math.sin(alpha) if not inverse else -math.sin(alpha)
    return frozen((I2 + sa * SIGMA_Y) / math.cos(alpha))


def square_root_metric(params: PTParams, inverse: bool = False) -> np.ndarray:
    sh = params.sinh_half_beta if not inverse else -params.sinh_half_beta
    return frozen(params.cosh_half_beta * I2 + sh * SIGMA_Y)


def pt_inner(u, v) -> complex:
    """Indefinite PT inner product (u, v) = (P T u) . v with P = sigma_x."""
    u = as_cvector(u)
    v = as_cvector(v)
    if u.shape != (2,) or v.shape != (2,):
        raise ContractViolation(f'pt_inner needs two 2-vectors, got {u.shape} and {v.shape}')
    return complex(np.dot(SIGMA_X @ np.conjugate(u), v))


def system_residuals(sys: PTSystem) -> dict[str, tuple[float, float]]:
    """Identity residuals of a system as ``name -> (lhs - rhs max error, scale)``."""
    n = max_entry
    H, Hdag, Psi, Xi = sys.H, sys.Hdag, sys.Psi, sys.Xi
    eta, rho, rho_inv, h, Phi = sys.eta, sys.rho, sys.rho_inv, sys.h, sys.Phi
    E = sys.E_tilde

    def pair(lhs, rhs, scale):
        return float(max_entry(np.asarray(lhs) - np.asarray(rhs))), float(scale)

    return {
        'pt_symmetry': pair(SIGMA_X @ np.conjugate(H) @ SIGMA_X, H, n(H)),
        'pseudo_hermiticity': pair(eta @ H, Hdag @ eta, n(eta) * n(H)),
        'rho_squared': pair(rho @ rho, eta, n(rho) ** 2),
        'rho_mirror': pair(rho @ rho_inv, I2, n(rho) * n(rho_inv)),
        'biorthonormality': pair(dagger(Xi) @ Psi, I2, n(Xi) * n(Psi)),
        'metric_from_xi': pair(Xi @ dagger(Xi), eta, n(Xi) ** 2),
        'inverse_metric_from_psi': pair(Psi @ dagger(Psi), sys.eta_inv, n(Psi) ** 2),
        'eigen_H': pair(H @ Psi, Psi @ E, n(H) * n(Psi)),
        'eigen_Hdag': pair(Hdag @ Xi, Xi @ E, n(Hdag) * n(Xi)),
        'h_hermitian': pair(h, dagger(h), n(rho) * n(H) * n(rho_inv)),
        'phi_unitary': pair(dagger(Phi) @ Phi, I2, n(rho) * n(Psi)),
        'h_eigen': pair(h @ Phi, Phi @ E, n(rho) * n(H) * n(rho_inv) * n(Phi)),
        'psi_from_phi': pair(rho_inv @ Phi, Psi, n(rho) ** 2 * n(Psi)),
        'xi_from_phi': pair(rho @ Phi, Xi, n(rho) ** 2 * n(Psi)),
    }


def build_system(params: PTParams, tol: float = DEFAULT_TOL) -> PTSystem:
    """Assemble every 2x2 object of the PT system and verify the identities linking them."""
    alpha = params.alpha
    logger.debug(
        f'Building PT system: E0={params.E0}, s={params.s}, alpha={alpha}, beta={params.beta}'
    )

    H = hamiltonian(params)
    Psi = frozen(np.column_stack([eigenvector(alpha, +1), eigenvector(alpha, -1)]))
    Xi = frozen(np.column_stack([eigenvector(-alpha, +1), eigenvector(-alpha, -1)]))
    rho = square_root_metric(params)
    rho_inv = square_root_metric(params, inverse=True)
    half_spacing = params.s * math.cos(alpha)

    sys = PTSystem(
        params=params,
        H=H,
        Hdag=dagger(H),
        Epair=(params.E0 + half_spacing, params.E0 - half_spacing),
        Psi=Psi,
        Xi=Xi,
        eta=metric(alpha),
        eta_inv=metric(alpha, inverse=True),
        rho=rho,
        rho_inv=rho_inv,
        h=frozen(rho @ H @ rho_inv),
        Phi=frozen(rho @ Psi),
    )

    for name, (error, scale) in system_residuals(sys).items():
        check_identity(name, error, 0.0, tol, scale)
    return sys


def mapped_spin_operator(sys: PTSystem) -> np.ndarray:
    """s_z = rho sigma_z rho^-1, the image of the spin observable under the equivalence map."""
    return frozen(sys.rho @ SIGMA_Z @ sys.rho_inv)
