"""Reservoir computers that abstract continuous attractor memories.

The package trains an echo-state reservoir on isolated translated copies of
a dynamical attractor (limit cycle or Lorenz), closes the feedback loop, and
quantifies whether a continuous family of attractors was learned via the
leading Lyapunov exponents and a differential-response analysis.
"""

from .attractors import (
    LIMIT_CYCLE,
    LORENZ,
    AttractorKind,
    AttractorSpec,
    ShiftSpec,
    Trajectory,
    analytic_jacobian,
    derivative,
    integrate,
    shift,
)
from .errors import (
    ConfigError,
    ContractViolationError,
    DegenerateBasisError,
    DivergenceError,
    NumericalFailureError,
    RankDeficiencyError,
    RCAbstractError,
)

__version__ = "0.1.0"
