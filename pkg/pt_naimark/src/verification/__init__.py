"""
Verification module.

Invariant suites over a fixed acceptance grid; ``run_verification`` runs
every registered suite and returns one :class:`CheckResult` per invariant.
"""

from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.verification.suite import BaseSuite, CheckResult, VerificationGrid
from pt_naimark.src.verification.suites import (
    AlgebraSuite,
    EmbeddingSuite,
    EvolutionSuite,
    LinalgSuite,
    NaimarkSuite,
    ProtocolSuite,
    RegimeSuite,
    SpectralSuite,
    TimingSuite,
)

logger = get_logger()

registered_suites = {
    'linalg': LinalgSuite,
    'algebra': AlgebraSuite,
    'evolution': EvolutionSuite,
    'embedding': EmbeddingSuite,
    'timing': TimingSuite,
    'spectral': SpectralSuite,
    'regime': RegimeSuite,
    'protocol': ProtocolSuite,
    'naimark': NaimarkSuite,
}


def run_verification(
    grid: VerificationGrid | None = None,
    tol: float | None = None,
    suites: list[str] | None = None,
) -> list[CheckResult]:
    """Run the named suites (all by default); ``tol`` overrides every per-invariant tolerance."""
    grid = grid or VerificationGrid()
    results = []
    for name in suites or list(registered_suites):
        suite = registered_suites[name](tol)
        logger.info(f'Running {name} suite')
        results.extend(suite.run(grid))
    failed = sum(not r.passed for r in results)
    logger.info(f'{len(results) - failed} of {len(results)} invariants passed')
    return results


__all__ = [
    'BaseSuite',
    'CheckResult',
    'VerificationGrid',
    'AlgebraSuite',
    'EmbeddingSuite',
    'EvolutionSuite',
    'LinalgSuite',
    'NaimarkSuite',
    'ProtocolSuite',
    'RegimeSuite',
    'SpectralSuite',
    'TimingSuite',
    'registered_suites',
    'run_verification',
]
