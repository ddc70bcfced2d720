import itertools
import math
from abc import ABC, abstractmethod
from typing import Callable, Optional

from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt, computed_field

from pt_naimark.src.logging_utils import get_logger
from pt_naimark.src.pt_system import PTParams
from pt_naimark.src.utils.errors import PTNaimarkError

logger = get_logger()

Recorder = Callable[..., None]


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    name: str
    max_error: float
    raw_error: float = 0.0
    tolerance: PositiveFloat
    points: int = 0
    detail: Optional[str] = None

    @computed_field
    @property
    def passed(self) -> bool:
        # NaN never passes
        return self.points > 0 and self.max_error <= self.tolerance

    def line(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        text = (
            f'{status} {self.suite}.{self.name} '
            f'max_error={self.max_error:.3e} raw_error={self.raw_error:.3e} '
            f'tol={self.tolerance:.1e} points={self.points}'
        )
        if self.detail:
            text += f' ({self.detail})'
        return text


class VerificationGrid(BaseModel):
    """Fixed parameter grid of the acceptance run."""

    model_config = ConfigDict(frozen=True)

    alphas: tuple[float, ...] = (-1.4, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 1.4)
    scales: tuple[float, ...] = (0.5, 1.0, 2.0)
    energies: tuple[float, ...] = (0.0, 0.7)
    epsilons: tuple[float, ...] = (0.3, 0.1, 0.03, 0.01)
    regime_omega0: float = 1.0
    timing_alphas: tuple[float, ...] = (-1.2, -0.5, 0.0, 0.5)
    trajectory_samples: PositiveInt = 200
    povm_instances: PositiveInt = 50
    seed: int = 1729

    def direct_points(self) -> list[PTParams]:
        return [
            PTParams(E0=E0, s=s, alpha=alpha)
            for E0, s, alpha in itertools.product(self.energies, self.scales, self.alphas)
        ]

    def regime_points(self, E0: float | None = None) -> list[PTParams]:
        energies = self.energies if E0 is None else (E0,)
        return [
            PTParams.from_regime(epsilon, self.regime_omega0, energy)
            for energy in energies
            for epsilon in self.epsilons
        ]

    def points(self) -> list[PTParams]:
        return self.direct_points() + self.regime_points()

    def hermitian_points(self) -> list[PTParams]:
        return [
            PTParams(E0=E0, s=s, alpha=0.0)
            for E0, s in itertools.product(self.energies, self.scales)
        ]


class BaseSuite(ABC):
    """A named group of invariants evaluated over a :class:`VerificationGrid`.

    Subclasses declare ``tolerances`` (invariant name -> tolerance) and fill
    them in ``collect`` by calling ``record(name, error, scale)`` once per
    evaluation. Errors are compared after division by ``max(1, scale)``.
    """

    name: str = 'base'
    tolerances: dict[str, float] = {}

    def __init__(self, tol: float | None = None):
        self.tol = tol

    @abstractmethod
    def collect(self, grid: VerificationGrid, record: Recorder):
        pass

    def tolerance(self, invariant: str) -> float:
        return self.tol if self.tol is not None else self.tolerances[invariant]

    def run(self, grid: VerificationGrid) -> list[CheckResult]:
        errors = {name: 0.0 for name in self.tolerances}
        raw = {name: 0.0 for name in self.tolerances}
        counts = {name: 0 for name in self.tolerances}
        failure = None

        def record(invariant: str, error: float, scale: float = 1.0):
            if invariant not in errors:
                raise KeyError(f'{self.name} has no invariant {invariant}')
            normalized = float(error) / max(1.0, float(scale))
            if math.isnan(error) or error > raw[invariant]:
                raw[invariant] = float(error)
            if math.isnan(normalized) or normalized > errors[invariant]:
                errors[invariant] = normalized
            counts[invariant] += 1

        try:
            self.collect(grid, record)
        except PTNaimarkError as e:
            logger.error(f'Suite {self.name} aborted: {e}')
            failure = str(e)

        results = []
        for invariant in self.tolerances:
            detail = failure
            if detail is None and counts[invariant] == 0:
                detail = 'not evaluated'
            results.append(
                CheckResult(
                    suite=self.name,
                    name=invariant,
                    max_error=math.inf if failure else errors[invariant],
                    raw_error=math.inf if failure else raw[invariant],
                    tolerance=self.tolerance(invariant),
                    points=counts[invariant],
                    detail=detail,
                )
            )
        return results
