import math
from typing import Literal, Optional

import pydantic
from pydantic import PositiveFloat, conint, field_validator, model_validator

from pt_naimark.src.linalg import DEFAULT_TOL
from pt_naimark.src.pt_system import PTParams

PARAMETER_COMMANDS = {'analyze', 'trajectory', 'dilate'}


def parse_grid(value) -> list[float]:
    """Parse ``a,b,c`` into floats; lists pass through."""
    if value is None:
        return None
    if isinstance(value, str):
        items = [item.strip() for item in value.split(',') if item.strip()]
        if not items:
            raise ValueError('grid is empty')
        return [float(item) for item in items]
    return [float(item) for item in value]


class CliConfig(pydantic.BaseModel):
    command: Literal['analyze', 'sweep', 'trajectory', 'dilate', 'verify']
    E0: float = 0.0
    alpha: Optional[float] = None
    s: Optional[float] = None
    epsilon: Optional[float] = None
    omega0: Optional[float] = None
    eps_grid: Optional[list[float]] = None
    n_samples: conint(ge=2) = 200
    output: Optional[str] = None
    format: Optional[Literal['csv', 'json']] = None
    tol: Optional[PositiveFloat] = None

    @field_validator('eps_grid', mode='before')
    @classmethod
    def validate_eps_grid(cls, v):
        return parse_grid(v)

    @field_validator('E0', 'alpha', 's', 'epsilon', 'omega0')
    @classmethod
    def check_finite(cls, v):
        if v is not None and not math.isfinite(v):
            raise ValueError(f'parameters must be finite, got {v}')
        return v

    @model_validator(mode='after')
    def check_parameter_groups(self):
        direct = self.alpha is not None or self.s is not None
        regime = self.epsilon is not None or self.omega0 is not None

        if self.command in PARAMETER_COMMANDS:
            if direct and regime:
                raise ValueError('give either --alpha/--s or --epsilon/--omega0, not both')
            if direct and (self.alpha is None or self.s is None):
                raise ValueError('--alpha and --s must be given together')
            if regime and (self.epsilon is None or self.omega0 is None):
                raise ValueError('--epsilon and --omega0 must be given together')
            if not direct and not regime:
                raise ValueError(f'{self.command} needs --alpha/--s or --epsilon/--omega0')
        elif self.command == 'sweep':
            if direct or self.epsilon is not None:
                raise ValueError('sweep takes --eps-grid and --omega0 only')
            if not self.eps_grid:
                raise ValueError('sweep needs --eps-grid')
            if not self.sweep_omega0 > 0:
                raise ValueError(f'omega0 must be positive, got {self.omega0}')
            for epsilon in self.eps_grid:
                if not 0 < epsilon <= math.pi / 2:
                    raise ValueError(f'epsilon must lie in (0, pi/2], got {epsilon}')
        elif direct or regime or self.eps_grid or self.E0 != 0.0:
            raise ValueError('verify runs a fixed grid and takes no parameters')

        if self.command == 'dilate' and self.format == 'csv':
            raise ValueError('dilate emits a JSON matrix document; csv is not available')

        if self.command in PARAMETER_COMMANDS:
            # resolve now so domain errors surface as configuration errors
            self.resolve_params()
        return self

    @property
    def sweep_omega0(self) -> float:
        return 1.0 if self.omega0 is None else self.omega0

    def resolve_params(self) -> PTParams:
        if self.alpha is not None:
            return PTParams(E0=self.E0, s=self.s, alpha=self.alpha)
        return PTParams.from_regime(self.epsilon, self.omega0, self.E0)

    def resolved_format(self) -> str:
        if self.format is not None:
            return self.format
        return 'json' if self.command == 'dilate' else 'csv'

    @property
    def construction_tol(self) -> float:
        return DEFAULT_TOL if self.tol is None else self.tol
