import math

import numpy as np
from pydantic import BaseModel, ConfigDict, InstanceOf

from pt_naimark.src.linalg import DEFAULT_TOL, as_cvector
from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.naimark import DilatedSystem
from pt_naimark.src.protocol.state import (
    BOLD_P_PLUS,
    E_MINUS,
    TwoQubitState,
    evolve_state,
    prepare_initial,
)
from pt_naimark.src.pt_system import PSI_I, PTSystem, final_state
from pt_naimark.src.utils.errors import ContractViolation

logger = get_logger()

# post-selection probability below this makes the Sigma_1 filter meaningless
FILTER_FLOOR = 1e-300


class MeasurementRecord(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p_sigma1_up: float
    p_sigma1_down: float
    post_filter_state: np.ndarray
    p_sigma2_up: float
    p_sigma2_down: float
    flip_fidelity: float
    final_state: InstanceOf[TwoQubitState]


def geodesic_distance(u, v, tol: float = DEFAULT_TOL) -> float:
    """Fubini-Study angle 2 arccos |<u|v>| between two normalized states."""
    u = as_cvector(u)
    v = as_cvector(v)
    if u.shape != v.shape:
        raise ContractViolation(f'Dimension mismatch: {u.shape} vs {v.shape}')
    for name, w in (('u', u), ('v', v)):
        norm = float(np.linalg.norm(w))
        if abs(norm - 1) > tol:
            raise ContractViolation(f'{name} is not normalized (norm {norm!r})')
    overlap = min(max(abs(np.vdot(u, v)), 0.0), 1.0)
    return 2 * math.acos(overlap)


def run_protocol(sys: PTSystem, ds: DilatedSystem) -> MeasurementRecord:
    """Evolve phi_I for the passage time, filter Sigma_1 = up, then read Sigma_2."""
    tau = sys.params.tau
    final = evolve_state(prepare_initial(sys), ds, tau)

    filtered = BOLD_P_PLUS @ final.vec
    p_up = float(np.vdot(filtered, filtered).real)
    if p_up < FILTER_FLOOR:
        raise ContractViolation(f'Sigma_1 filtering impossible, p_up={p_up!r}')

    post = filtered[:2] / math.sqrt(p_up)
    p2_up = float(abs(post[0]) ** 2)
    p2_down = float(abs(post[1]) ** 2)
    record = MeasurementRecord(
        p_sigma1_up=p_up,
        p_sigma1_down=1.0 - p_up,
        post_filter_state=as_cvector(post),
        p_sigma2_up=p2_up,
        p_sigma2_down=p2_down,
        flip_fidelity=float(abs(np.vdot(E_MINUS, post))),
        final_state=final,
    )
    logger.debug(
        f'Protocol at alpha={sys.params.alpha}: p_up={p_up}, fidelity={record.flip_fidelity}'
    )
    return record


def subsystem_distance(sys: PTSystem) -> float:
    """delta_2 between psi_I and the canonical psi_F."""
    return geodesic_distance(PSI_I, final_state(sys.params))


def hermitian_picture_distance(sys: PTSystem) -> float:
    """Distance between rho psi_I and rho psi_F, the endpoints seen by the Hermitian h."""
    u = sys.rho @ PSI_I
    v = sys.rho @ final_state(sys.params)
    return geodesic_distance(u / np.linalg.norm(u), v / np.linalg.norm(v))
