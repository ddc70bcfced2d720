"""
Non-unitary evolution, brachistochrone timing and trajectory sampling.
"""

import math
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.optimize import bisect

from pt_naimark.src.linalg import as_cvector, expm, frozen
from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.pt_system.params import PTParams
from pt_naimark.src.pt_system.system import PTSystem
from pt_naimark.src.utils.errors import ParameterDomainError, PTNaimarkError

logger = get_logger()

TRAJECTORY_COLUMNS = [
    't',
    're_psi0',
    'im_psi0',
    're_psi1',
    'im_psi1',
    're_chi0',
    'im_chi0',
    're_chi1',
    'im_chi1',
]

PSI_I = as_cvector([1, 0])


def evolution(sys: PTSystem, t: float) -> np.ndarray:
    """U(t) = e^{-itH} in closed form, y = omega0 t / 2.

    U(t) = e^{-i E0 t} / cos(alpha) [[cos(y - alpha), -i sin y], [-i sin y, cos(y + alpha)]]
    """
    p = sys.params
    y = p.omega0 * t / 2
    a = p.alpha
    phase = np.exp(-1j * p.E0 * t) / math.cos(a)
    return frozen(
        phase
        * np.array([
            [math.cos(y - a), -1j * math.sin(y)],
            [-1j * math.sin(y), math.cos(y + a)],
        ])
    )


def passage_times(params: PTParams) -> tuple[float, float]:
    """(tau, tau_h): the PT passage time and the Hermitian lower bound pi/omega0."""
    return params.tau, params.tau_h


def final_state(params: PTParams) -> np.ndarray:
    """psi_F = mu_F (0, 1) with mu_F = -i e^{-i E0 tau}."""
    mu_f = -1j * np.exp(-1j * params.E0 * params.tau)
    return as_cvector([0, mu_f])


def subsystem_state(params: PTParams, t) -> np.ndarray:
    """psi(t) = U(t) psi_I from the closed form; ``t`` may be an array of times."""
    t = np.asarray(t, dtype=float)
    y = params.omega0 * t / 2
    phase = np.exp(-1j * params.E0 * t) / math.cos(params.alpha)
    return np.stack([phase * np.cos(y - params.alpha), -1j * phase * np.sin(y)], axis=-1)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    psi: np.ndarray
    chi: np.ndarray | None = None


def trajectory(sys: PTSystem, t_max: float, n: int) -> Trajectory:
    """Sample psi(t) and its ancilla partner chi(t) = eta psi(t) on a uniform grid."""
    if n < 2:
        raise ParameterDomainError(f'trajectory needs at least 2 samples, got {n}')
    if not t_max > 0:
        raise ParameterDomainError(f't_max must be positive, got {t_max}')

    times = np.linspace(0.0, t_max, n)
    times.setflags(write=False)
    psi = subsystem_state(sys.params, times)
    chi = psi @ np.asarray(sys.eta).T
    logger.debug(f'Sampled trajectory with {n} points up to t={t_max}')
    return Trajectory(times=times, psi=frozen(psi), chi=frozen(chi))


def trajectory_frame(traj: Trajectory) -> pd.DataFrame:
    chi = traj.chi if traj.chi is not None else np.full_like(traj.psi, np.nan)
    return pd.DataFrame(
        {
            't': traj.times,
            're_psi0': traj.psi[:, 0].real,
            'im_psi0': traj.psi[:, 0].imag,
            're_psi1': traj.psi[:, 1].real,
            'im_psi1': traj.psi[:, 1].imag,
            're_chi0': chi[:, 0].real,
            'im_chi0': chi[:, 0].imag,
            're_chi1': chi[:, 1].real,
            'im_chi1': chi[:, 1].imag,
        },
        columns=TRAJECTORY_COLUMNS,
    )


def first_flip_time(sys: PTSystem, n_scan: int = 2000) -> float:
    """Passage time found numerically, independent of the closed-form formula.

    psi(t) comes from expm(-itH). After stripping the trace phase
    e^{-it tr(H)/2} the first component is real; its first zero is the first
    time psi(t) lies on the ray of (0, 1). A dense scan brackets the sign
    change and bisection refines it.
    """
    p = sys.params
    t_end = math.pi / (p.s * math.cos(p.alpha)) * (1 + 1e-3)
    half_trace = complex(np.trace(sys.H)) / 2

    def amplitude(t: float) -> float:
        psi0 = expm(-1j * t * np.asarray(sys.H))[0, 0]
        return float(np.real(np.exp(1j * t * half_trace) * psi0))

    previous = 0.0
    for t in np.linspace(0.0, t_end, n_scan + 1)[1:]:
        value = amplitude(t)
        if value == 0.0:
            return float(t)
        if value < 0.0:
            root = bisect(amplitude, previous, float(t), xtol=1e-14)
            logger.debug(f'First flip bracketed in [{previous}, {t}], refined to {root}')
            return float(root)
        previous = float(t)
    raise PTNaimarkError(f'No spin flip found before t={t_end}')
