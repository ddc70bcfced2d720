import numpy as np

from pt_naimark.src.linalg import DEFAULT_TOL, as_cvector, frozen, max_abs_diff
from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.utils.errors import ContractViolation

logger = get_logger()

# completion candidates with a smaller residual are skipped
RESIDUAL_CUTOFF = 1e-12


def _orthogonalise(candidate: np.ndarray, rows: list[np.ndarray]) -> np.ndarray:
    # two passes of modified Gram-Schmidt
    for _ in range(2):
        for row in rows:
            candidate = candidate - np.vdot(row, candidate) * row
    return candidate


def general_naimark(x, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Complete the partial isometry M = [x_1 ... x_n] to an n x n unitary.

    The top N rows of the result are M itself. The remaining rows come from
    Gram-Schmidt over the canonical basis e_1 ... e_n (in that order), skipping
    candidates whose residual norm falls below 1e-12.
    """
    vectors = [as_cvector(v) for v in x]
    if not vectors:
        raise ContractViolation('general_naimark needs at least one vector')
    N = vectors[0].shape[0]
    n = len(vectors)
    if any(v.shape != (N,) for v in vectors):
        raise ContractViolation('general_naimark needs vectors of equal dimension')
    if n < N:
        raise ContractViolation(f'general_naimark needs n >= N, got n={n}, N={N}')

    M = np.column_stack(vectors)
    completeness = max_abs_diff(M @ np.conjugate(M).T, np.eye(N))
    if completeness > tol:
        raise ContractViolation(
            f'sum x_k x_k^dagger differs from the identity by {completeness:.3e}'
        )

    rows = [np.array(M[i, :]) for i in range(N)]
    for j in range(n):
        if len(rows) == n:
            break
        residual = _orthogonalise(np.eye(n, dtype=np.complex128)[j], rows)
        norm = np.linalg.norm(residual)
        if norm < RESIDUAL_CUTOFF:
            continue
        rows.append(residual / norm)

    if len(rows) < n:
        raise ContractViolation(
            f'Completion found only {len(rows)} of {n} rows; M is rank deficient'
        )
    logger.debug(f'Completed a {N}x{n} isometry with {n - N} rows')
    return frozen(np.vstack(rows))


def row_space_projector(rows) -> np.ndarray:
    """L^dagger L, the projector onto the span of orthonormal rows L."""
    L = np.atleast_2d(np.asarray(rows, dtype=np.complex128))
    return frozen(np.conjugate(L).T @ L)


def random_rank_one_povm(N: int, n: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Vectors x_k (columns of the first N rows of a random unitary) with sum x x^dagger = I_N."""
    if not 1 <= N <= n:
        raise ContractViolation(f'random_rank_one_povm needs 1 <= N <= n, got N={N}, n={n}')
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    # fix the column phases so q is Haar distributed
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    top = q[:N, :]
    return [as_cvector(top[:, k]) for k in range(n)]
