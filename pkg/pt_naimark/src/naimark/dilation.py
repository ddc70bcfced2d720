"""
Explicit 4x4 Naimark dilation of the PT brachistochrone.

V = f [sigma_z (x) Psi + sigma_x (x) Xi] lifts the partial isometry
M = f [Psi, Xi] to a unitary; its columns give the ortho-projectors P_k that
embed the POVM A_k. The dilated Hamiltonian H4 = V E4 V^dagger splits as
I2 (x) Lambda + i sigma_y (x) Omega and generates the unitary U4(t) with
blocks [[F, G], [-G, F]].
"""

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from pt_naimark.src.linalg import (
    DEFAULT_TOL,
    I2,
    I4,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    check_identity,
    dagger,
    frozen,
    kron,
    max_entry,
)
from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.pt_system import PTSystem, evolution, subsystem_state
from pt_naimark.src.utils.errors import ContractViolation

logger = get_logger()

DILATION_TOL = 1e-12
# below this |sin(alpha)| Omega is treated as singular
OMEGA_SINGULAR = 1e-10


@dataclass(frozen=True)
class DilatedSystem:
    system: PTSystem
    M: np.ndarray
    V: np.ndarray
    projectors: tuple[np.ndarray, ...]
    E4: np.ndarray
    H4: np.ndarray
    Lambda: np.ndarray
    Omega: np.ndarray

    def matrices(self) -> dict[str, np.ndarray]:
        return {
            'M': self.M,
            'V': self.V,
            'H4': self.H4,
            'Lambda': self.Lambda,
            'Omega': self.Omega,
            'E4': self.E4,
        }


def lambda_omega(sys: PTSystem) -> tuple[np.ndarray, np.ndarray]:
    """Closed forms Lambda = E0 I + (omega0/2) cos(a) sigma_x, Omega = i (omega0/2) sin(a) sigma_z."""
    p = sys.params
    half = p.omega0 / 2
    Lambda = p.E0 * I2 + half * math.cos(p.alpha) * SIGMA_X
    Omega = 1j * half * math.sin(p.alpha) * SIGMA_Z
    return frozen(Lambda), frozen(Omega)


def dilation_residuals(ds: DilatedSystem) -> dict[str, tuple[float, float]]:
    """Identity residuals of a dilation as ``name -> (max error, scale)``."""
    sys = ds.system
    f2 = sys.params.f**2
    n = max_entry
    V, H4 = ds.V, ds.H4

    def pair(lhs, rhs, scale=1.0):
        return float(max_entry(np.asarray(lhs) - np.asarray(rhs))), float(scale)

    projector_products = max(
        max_entry(ds.projectors[j] @ ds.projectors[k] - (ds.projectors[k] if j == k else 0))
        for j in range(4)
        for k in range(4)
    )
    Lambda_direct = f2 * (sys.H @ sys.eta_inv + sys.eta @ sys.H)
    Omega_direct = f2 * (sys.H - sys.Hdag)
    factored = sys.params.f * (kron(SIGMA_Z, sys.rho_inv) + kron(SIGMA_X, sys.rho)) @ kron(
        I2, sys.Phi
    )
    shifted = H4 - sys.params.E0 * I4
    half = sys.params.omega0 / 2

    return {
        'partial_isometry': pair(ds.M @ dagger(ds.M), I2),
        'V_unitary_left': pair(V @ dagger(V), I4),
        'V_unitary_right': pair(dagger(V) @ V, I4),
        'V_top_block': pair(V[:2, :], ds.M),
        'V_factored_form': pair(V, factored, n(sys.rho) * n(sys.Phi)),
        'projector_completeness': pair(sum(ds.projectors), I4),
        'projector_orthogonality': (float(projector_products), 1.0),
        'H4_hermitian': pair(H4, dagger(H4), n(sys.H) + n(ds.E4)),
        'H4_block_form': pair(
            H4, kron(I2, ds.Lambda) + 1j * kron(SIGMA_Y, ds.Omega), n(ds.E4)
        ),
        'Lambda_direct': pair(
            ds.Lambda, Lambda_direct, f2 * n(sys.H) * n(sys.eta)
        ),
        'Omega_direct': pair(ds.Omega, Omega_direct, f2 * n(sys.H)),
        'H4_square': pair(shifted @ shifted, half**2 * I4, n(H4) ** 2),
    }


def dilate(sys: PTSystem, tol: float = DILATION_TOL) -> DilatedSystem:
    """Build M, V, the projectors, E4, H4, Lambda and Omega and verify them."""
    f = sys.params.f
    M = frozen(f * np.hstack([sys.Psi, sys.Xi]))
    V = frozen(f * (kron(SIGMA_Z, sys.Psi) + kron(SIGMA_X, sys.Xi)))
    projectors = tuple(frozen(np.outer(V[:, k], np.conjugate(V[:, k]))) for k in range(4))
    E4 = kron(I2, sys.E_tilde)
    # E0 kept off the product so the offset lands exactly on the diagonal
    E0 = sys.params.E0
    H4 = frozen(E0 * I4 + V @ (E4 - E0 * I4) @ dagger(V))
    Lambda, Omega = lambda_omega(sys)

    ds = DilatedSystem(
        system=sys,
        M=M,
        V=V,
        projectors=projectors,
        E4=E4,
        H4=H4,
        Lambda=Lambda,
        Omega=Omega,
    )
    for name, (error, scale) in dilation_residuals(ds).items():
        check_identity(name, error, 0.0, tol, scale)
    logger.debug(f'Dilated system built for alpha={sys.params.alpha}')
    return ds


def evolution_blocks(sys: PTSystem, t: float) -> tuple[np.ndarray, np.ndarray]:
    """F = e^{-iE0t}[cos y I - i sin y cos(a) sigma_x], G = e^{-iE0t} sin y sin(a) sigma_z."""
    p = sys.params
    y = p.omega0 * t / 2
    phase = np.exp(-1j * p.E0 * t)
    F = phase * (math.cos(y) * I2 - 1j * math.sin(y) * math.cos(p.alpha) * SIGMA_X)
    G = phase * (math.sin(y) * math.sin(p.alpha) * SIGMA_Z)
    return frozen(F), frozen(G)


def dilated_evolution(ds: DilatedSystem, t: float) -> np.ndarray:
    """U4(t) = e^{-itH4} = [[F, G], [-G, F]] from the closed-form blocks."""
    F, G = evolution_blocks(ds.system, t)
    return frozen(np.block([[F, G], [-G, F]]))


def spectral_evolution(ds: DilatedSystem, t: float) -> np.ndarray:
    """U4(t) = V e^{-i E4 t} V^dagger; used as an oracle only."""
    phases = np.exp(-1j * np.real(np.diag(ds.E4)) * t)
    return frozen(ds.V @ np.diag(phases) @ dagger(ds.V))


def dilated_evolution_from_subsystem(sys: PTSystem, t: float) -> np.ndarray:
    """U4(t) = f^2 {I2 (x) [U eta^-1 + eta U] + i sigma_y (x) [U - eta U eta^-1]}."""
    f2 = sys.params.f**2
    U = np.asarray(evolution(sys, t))
    diagonal = U @ sys.eta_inv + sys.eta @ U
    off = U - sys.eta @ U @ sys.eta_inv
    return frozen(f2 * (kron(I2, diagonal) + 1j * kron(SIGMA_Y, off)))


def ancilla_state(
    sys: PTSystem, t: float, route: Literal['metric', 'generator'] = 'metric'
) -> np.ndarray:
    """Ancilla component chi(t) that keeps the subsystem on psi(t) = U(t) psi_I.

    ``metric`` uses chi = eta psi(t), valid for every alpha. ``generator``
    solves Lambda psi + Omega chi = H psi, i.e. chi = Omega^-1 (H - Lambda) psi,
    which needs Omega invertible (alpha away from 0).
    """
    psi = subsystem_state(sys.params, t)
    if route == 'metric':
        return frozen(sys.eta @ psi)
    if route == 'generator':
        if abs(math.sin(sys.params.alpha)) < OMEGA_SINGULAR:
            raise ContractViolation(
                f'Omega is singular at alpha={sys.params.alpha}; use the metric route'
            )
        Lambda, Omega = lambda_omega(sys)
        return frozen(np.linalg.solve(Omega, (sys.H - Lambda) @ psi))
    raise ContractViolation(f'Unknown ancilla route: {route}')


def ancilla_closed_form(sys: PTSystem, t: float) -> np.ndarray:
    """chi(t) = e^{-iE0t}/cos(a) (cos y, -i sin(y - a))."""
    p = sys.params
    y = p.omega0 * t / 2
    phase = np.exp(-1j * p.E0 * t) / math.cos(p.alpha)
    return frozen(phase * np.array([math.cos(y), -1j * math.sin(y - p.alpha)]))
