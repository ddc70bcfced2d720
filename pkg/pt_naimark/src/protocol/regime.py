"""
Timing and geometry of the vanishing-passage regime.

Each row fixes the level spacing omega0 and moves towards the exceptional
point by epsilon = alpha + pi/2. The energy spread of the dilated initial
state is taken from the moments of H4, so the Anandan-Aharonov product
2 tau dE can be compared with delta_4 independently of any closed form.
"""

import math

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from pt_naimark.src.linalg import DEFAULT_TOL
from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.naimark import DilatedSystem, dilate
from pt_naimark.src.protocol.measurement import (
    MeasurementRecord,
    geodesic_distance,
    hermitian_picture_distance,
    run_protocol,
    subsystem_distance,
)
from pt_naimark.src.protocol.state import TwoQubitState, prepare_initial
from pt_naimark.src.pt_system import PTParams, PTSystem, build_system
from pt_naimark.src.utils.errors import ParameterDomainError

logger = get_logger()

REGIME_COLUMNS = [
    'epsilon',
    'alpha',
    's',
    'tau',
    'tau_h',
    'delta2',
    'delta4',
    'p_success',
    'energy_spread',
    'aa_product',
]

ANALYSIS_COLUMNS = REGIME_COLUMNS + [
    'E0',
    'E_plus',
    'E_minus',
    'omega0',
    'beta',
    'delta_h',
    'speedup',
    'flip_fidelity',
]


class RegimeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    epsilon: float
    alpha: float
    s: float
    tau: float
    tau_h: float
    delta2: float
    delta4: float
    p_success: float
    energy_spread: float
    aa_product: float
    delta_h: float
    speedup: float


def energy_moments(H4, state: TwoQubitState) -> tuple[float, float]:
    """(<H4>, dE) in ``state`` with dE = ||(H4 - <H4>) phi|| as a centred moment.

    Moments are taken about the mean diagonal entry first, so a large offset
    E0 does not cancel against itself.
    """
    H4 = np.asarray(H4)
    v = state.vec
    reference = float(np.trace(H4).real) / H4.shape[0]
    Kv = (H4 - reference * np.eye(H4.shape[0])) @ v
    shift = float(np.vdot(v, Kv).real)
    spread = float(np.linalg.norm(Kv - shift * v))
    return reference + shift, spread


def _report(sys: PTSystem, ds: DilatedSystem, record: MeasurementRecord) -> RegimeReport:
    params = sys.params
    initial = prepare_initial(sys)
    _, spread = energy_moments(ds.H4, initial)

    return RegimeReport(
        epsilon=params.epsilon,
        alpha=params.alpha,
        s=params.s,
        tau=params.tau,
        tau_h=params.tau_h,
        delta2=subsystem_distance(sys),
        delta4=geodesic_distance(initial.vec, record.final_state.vec),
        p_success=record.p_sigma1_up,
        energy_spread=spread,
        aa_product=2 * params.tau * spread,
        delta_h=hermitian_picture_distance(sys),
        speedup=params.tau_h / params.tau,
    )


def regime_row(params: PTParams, tol: float = DEFAULT_TOL) -> RegimeReport:
    sys = build_system(params, tol)
    ds = dilate(sys)
    return _report(sys, ds, run_protocol(sys, ds))


def analysis_record(params: PTParams, tol: float = DEFAULT_TOL) -> dict[str, float]:
    """Regime row of one parameter point plus its spectrum and the flip fidelity."""
    sys = build_system(params, tol)
    ds = dilate(sys)
    record = run_protocol(sys, ds)
    row = _report(sys, ds, record).model_dump()
    row.update(
        E0=params.E0,
        E_plus=sys.Epair[0],
        E_minus=sys.Epair[1],
        omega0=params.omega0,
        beta=params.beta,
        flip_fidelity=record.flip_fidelity,
    )
    return {column: float(row[column]) for column in ANALYSIS_COLUMNS}


def regime_report(
    omega0: float, epsilons, E0: float = 0.0, tol: float = DEFAULT_TOL
) -> list[RegimeReport]:
    """One report per epsilon at fixed omega0, sorted by epsilon.

    epsilon must lie in (0, pi/2]; pi/2 is the Hermitian limit alpha = 0.
    """
    if not omega0 > 0:
        raise ParameterDomainError(f'omega0 must be positive, got {omega0}')
    epsilons = sorted(float(e) for e in epsilons)
    for epsilon in epsilons:
        if not 0 < epsilon <= math.pi / 2:
            raise ParameterDomainError(f'epsilon must lie in (0, pi/2], got {epsilon}')
    logger.debug(f'Regime report over {len(epsilons)} points at omega0={omega0}')
    return [regime_row(PTParams.from_regime(e, omega0, E0), tol) for e in epsilons]


def regime_frame(reports: list[RegimeReport]) -> pd.DataFrame:
    rows = [r.model_dump(include=set(REGIME_COLUMNS)) for r in reports]
    return pd.DataFrame(rows, columns=REGIME_COLUMNS)
