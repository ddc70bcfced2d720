import math

from pydantic import BaseModel, ConfigDict, computed_field, field_validator, model_validator

from pt_naimark.src.utils.errors import ParameterDomainError

# |cos(alpha)| below this is treated as the exceptional point itself
EXCEPTIONAL_POINT_GUARD = 1e-8


class PTParams(BaseModel):
    """Scalar parameters (E0, s, alpha) of the PT-symmetric two-level Hamiltonian.

    Units follow hbar = 1. ``alpha`` must stay strictly inside (-pi/2, pi/2),
    the unbroken sector; everything else is derived.
    """

    model_config = ConfigDict(frozen=True)

    E0: float = 0.0
    s: float
    alpha: float

    @field_validator('E0', 's', 'alpha')
    @classmethod
    def check_finite(cls, v):
        if not math.isfinite(v):
            raise ValueError(f'parameters must be finite, got {v}')
        return v

    @field_validator('s')
    @classmethod
    def check_scale(cls, v):
        if v <= 0:
            raise ValueError(f's must be positive, got {v}')
        return v

    @field_validator('alpha')
    @classmethod
    def check_alpha(cls, v):
        if not -math.pi / 2 < v < math.pi / 2:
            raise ValueError(f'alpha must lie in (-pi/2, pi/2), got {v}')
        if abs(math.cos(v)) < EXCEPTIONAL_POINT_GUARD:
            raise ValueError(f'alpha={v} is at the exceptional point (|cos alpha| < 1e-8)')
        return v

    @model_validator(mode='after')
    def check_spacing(self):
        if not math.isfinite(self.omega0) or self.omega0 <= 0:
            raise ValueError(f'level spacing omega0 must be positive, got {self.omega0}')
        return self

    @classmethod
    def from_regime(cls, epsilon: float, omega0: float, E0: float = 0.0) -> 'PTParams':
        """Parametrise by the distance epsilon = alpha + pi/2 from the exceptional point.

        s is chosen so that the level spacing s*cos(alpha) = omega0/2 stays fixed.
        """
        if not 0 < epsilon < math.pi:
            raise ParameterDomainError(f'epsilon must lie in (0, pi), got {epsilon}')
        if not omega0 > 0:
            raise ParameterDomainError(f'omega0 must be positive, got {omega0}')
        alpha = epsilon - math.pi / 2
        return cls(E0=E0, s=omega0 / (2 * math.cos(alpha)), alpha=alpha)

    @computed_field
    @property
    def omega0(self) -> float:
        return 2 * self.s * math.cos(self.alpha)

    @computed_field
    @property
    def beta(self) -> float:
        # sinh(beta) = tan(alpha) is equivalent to tanh(beta) = sin(alpha)
        return math.asinh(math.tan(self.alpha))

    @computed_field
    @property
    def f(self) -> float:
        return math.sqrt(math.cos(self.alpha) / 2)

    @computed_field
    @property
    def g(self) -> float:
        return math.cos(self.alpha) / math.sqrt(2)

    @computed_field
    @property
    def epsilon(self) -> float:
        return self.alpha + math.pi / 2

    @computed_field
    @property
    def tau(self) -> float:
        return self.epsilon / (self.s * math.cos(self.alpha))

    @computed_field
    @property
    def tau_h(self) -> float:
        return math.pi / self.omega0

    @property
    def cosh_half_beta(self) -> float:
        return math.sqrt((1 / math.cos(self.alpha) + 1) / 2)

    @property
    def sinh_half_beta(self) -> float:
        return math.tan(self.alpha) / (2 * self.cosh_half_beta)
