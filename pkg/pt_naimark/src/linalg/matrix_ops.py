"""
Dense complex algebra for the 2x2 and 4x4 objects of the dilation.

Matrices are plain ``numpy`` complex128 arrays flagged read-only after
construction, so every routine here is a pure function of its inputs.
Comparisons are made with the max of component-wise absolute differences
(real and imaginary parts taken separately).
"""

import math

import numpy as np
from pydantic import BaseModel

from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.utils.errors import ContractViolation, InvariantViolation

logger = get_logger()

DEFAULT_TOL = 1e-10
SERIES_TOL = 1e-13
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
MAX_SERIES_TERMS = 60
# scaled norm bound before the truncated series is evaluated
SCALING_BOUND = 0.5


def frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.setflags(write=False)
    return a


def _require_finite(a: np.ndarray, what: str):
    if not np.all(np.isfinite(a)):
        raise ContractViolation(f'{what} contains NaN or Inf entries')


def as_cmatrix(a) -> np.ndarray:
    """Validate and freeze a 2-D complex matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise ContractViolation(f'Expected a non-empty 2-D matrix, got shape {m.shape}')
    _require_finite(m, 'matrix')
    return frozen(m)


def as_cvector(v) -> np.ndarray:
    """Validate and freeze a 1-D complex vector."""
    x = np.asarray(v, dtype=np.complex128)
    if x.ndim != 1 or x.shape[0] == 0:
        raise ContractViolation(f'Expected a non-empty 1-D vector, got shape {x.shape}')
    _require_finite(x, 'vector')
    return frozen(x)


def _require_square(a: np.ndarray, operation: str):
    if a.shape[0] != a.shape[1]:
        raise ContractViolation(f'{operation} needs a square matrix, got shape {a.shape}')


def identity(n: int) -> np.ndarray:
    return frozen(np.eye(n))


I2 = identity(2)
I4 = identity(4)
SIGMA_X = frozen([[0, 1], [1, 0]])
SIGMA_Y = frozen([[0, -1j], [1j, 0]])
SIGMA_Z = frozen([[1, 0], [0, -1]])


def dagger(a) -> np.ndarray:
    return frozen(np.conjugate(np.asarray(a)).T)


def max_entry(a) -> float:
    a = np.asarray(a, dtype=np.complex128)
    if a.size == 0:
        return 0.0
    return float(max(np.max(np.abs(a.real)), np.max(np.abs(a.imag))))


def max_abs_diff(a, b) -> float:
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ContractViolation(f'Shape mismatch in comparison: {a.shape} vs {b.shape}')
    return max_entry(a - b)


def check_identity(name: str, lhs, rhs, tol: float = DEFAULT_TOL, scale: float = 1.0) -> float:
    """Compare ``lhs`` and ``rhs`` and abort on mismatch.

    ``scale`` is the magnitude of the intermediate products behind the
    identity; the admitted error is ``tol * max(1, scale)``.
    """
    error = max_abs_diff(lhs, rhs)
    allowed = tol * max(1.0, scale)
    logger.debug(f'{name}: max error {error:.3e} (allowed {allowed:.3e})')
    if error > allowed:
        raise InvariantViolation(name, error, allowed)
    return error


def kron(a, b) -> np.ndarray:
    a = as_cmatrix(a)
    b = as_cmatrix(b)
    return frozen(np.kron(a, b))


def expm(a, tol: float = SERIES_TOL) -> np.ndarray:
    """Matrix exponential by scaling and squaring of a truncated Taylor series.

    The input is scaled by ``2**-k`` until its 1-norm is below 0.5, the series
    is summed until the last term drops below ``tol`` in max-entry norm, and
    the result is squared ``k`` times.
    """
    a = as_cmatrix(a)
    _require_square(a, 'expm')
    if tol <= 0:
        raise ContractViolation(f'expm tolerance must be positive, got {tol}')
    n = a.shape[0]

    norm = float(np.linalg.norm(a, 1))
    squarings = 0 if norm < SCALING_BOUND else int(math.floor(math.log2(norm))) + 2
    scaled = a / 2.0**squarings

    result = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, MAX_SERIES_TERMS + 1):
        term = term @ scaled / k
        result = result + term
        if max_entry(term) < tol:
            break

    for _ in range(squarings):
        result = result @ result
    return frozen(result)


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return max_abs_diff(a, np.conjugate(a).T) <= tol


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    n = a.shape[0]
    eye = np.eye(n)
    return (
        max_abs_diff(a @ np.conjugate(a).T, eye) <= tol
        and max_abs_diff(np.conjugate(a).T @ a, eye) <= tol
    )


def _off_diagonal_max(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.max(np.abs(off))) if off.size else 0.0


def _jacobi_rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    # phase the (p, q) entry real, then rotate as in the real symmetric case
    r = abs(apq)
    phase = np.exp(-1j * np.angle(apq))
    theta = 0.5 * math.atan2(2.0 * r, app - aqq)
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s * phase, c * phase]], dtype=np.complex128)


def _jacobi_sweep(work: np.ndarray, vectors: np.ndarray):
    n = work.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            if work[p, q] == 0:
                continue
            rotation = _jacobi_rotation(work[p, p].real, work[q, q].real, work[p, q])
            idx = [p, q]
            work[:, idx] = work[:, idx] @ rotation
            work[idx, :] = np.conjugate(rotation).T @ work[idx, :]
            vectors[:, idx] = vectors[:, idx] @ rotation


def hermitian_eigen(a, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Returns eigenvalues in descending order (ties keep their first-occurrence
    order) and the unitary matrix whose columns are the matching eigenvectors.
    """
    a = as_cmatrix(a)
    _require_square(a, 'hermitian_eigen')
    if not is_hermitian(a, tol):
        raise ContractViolation(
            f'hermitian_eigen needs a Hermitian matrix, asymmetry {max_abs_diff(a, dagger(a)):.3e}'
        )
    n = a.shape[0]
    work = 0.5 * (np.array(a) + np.conjugate(a).T)
    vectors = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_TOL * max(1.0, max_entry(work))

    for sweep in range(JACOBI_MAX_SWEEPS):
        if _off_diagonal_max(work) < threshold:
            logger.debug(f'Jacobi converged after {sweep} sweeps')
            break
        _jacobi_sweep(work, vectors)
    else:
        residual = _off_diagonal_max(work)
        if residual >= threshold:
            logger.warning(
                f'Jacobi stopped after {JACOBI_MAX_SWEEPS} sweeps, off-diagonal {residual:.3e}'
            )

    eigenvalues = np.real(np.diag(work))
    order = np.argsort(-eigenvalues, kind='stable')
    values = np.array(eigenvalues[order], dtype=float)
    values.setflags(write=False)
    return values, frozen(vectors[:, order])


def is_psd(a, tol: float = DEFAULT_TOL) -> bool:
    if not is_hermitian(a, tol):
        return False
    values, _ = hermitian_eigen(a, tol)
    return bool(values[-1] >= -tol)


class MatrixReport(BaseModel):
    hermitian: bool
    unitary: bool
    psd: bool
    trace: complex
    determinant: complex | None = None


def matrix_checks(a, tol: float = DEFAULT_TOL) -> MatrixReport:
    a = as_cmatrix(a)
    _require_square(a, 'matrix_checks')
    determinant = None
    if a.shape == (2, 2):
        determinant = complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    return MatrixReport(
        hermitian=is_hermitian(a, tol),
        unitary=is_unitary(a, tol),
        psd=is_psd(a, tol),
        trace=complex(np.trace(a)),
        determinant=determinant,
    )
