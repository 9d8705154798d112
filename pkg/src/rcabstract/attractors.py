"""Input attractor systems: a planar stable limit cycle and the Lorenz system.

Both systems come with analytic Jacobians so that ground-truth Lyapunov
spectra can be computed along their orbits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, DivergenceError

# Any state component beyond this magnitude is treated as a blow-up.
BLOWUP_LIMIT = 1.0e6

LORENZ_SIGMA = 10.0
LORENZ_RHO = 28.0
LORENZ_BETA = 8.0 / 3.0

# Limit cycle: Hopf-type normal form with invariant circle of radius
# sqrt(2) and angular speed 10 (period 2*pi/10).
CYCLE_RATE = 10.0
CYCLE_RADIUS_SQ = 2.0


class AttractorKind(str, enum.Enum):
    LIMIT_CYCLE = "limit_cycle"
    LORENZ = "lorenz"


_DIMENSION = {AttractorKind.LIMIT_CYCLE: 2, AttractorKind.LORENZ: 3}


@dataclass(frozen=True)
class AttractorSpec:
    """Which attractor family a trajectory belongs to."""

    kind: AttractorKind

    def __post_init__(self):
        object.__setattr__(self, "kind", AttractorKind(self.kind))

    @property
    def dimension(self) -> int:
        return _DIMENSION[self.kind]

    @property
    def default_initial_state(self) -> np.ndarray:
        if self.kind is AttractorKind.LIMIT_CYCLE:
            return np.array([1.0, 1.0])
        return np.array([1.0, 1.0, 1.0])


LIMIT_CYCLE = AttractorSpec(AttractorKind.LIMIT_CYCLE)
LORENZ = AttractorSpec(AttractorKind.LORENZ)


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled multivariate time series.

    states has shape (n_samples, dim); sample i sits at time t0 + i*dt.
    """

    states: np.ndarray
    dt: float
    t0: float = 0.0

    def __post_init__(self):
        states = np.asarray(self.states, dtype=np.float64)
        if states.ndim == 1:
            states = states[:, None]
        if states.ndim != 2 or len(states) < 1:
            raise ContractViolationError(
                f"states must be a nonempty 2-D array, got shape {states.shape}"
            )
        if not self.dt > 0:
            raise ContractViolationError(f"dt must be positive, got {self.dt}")
        object.__setattr__(self, "states", states)

    def __len__(self) -> int:
        return len(self.states)

    @property
    def dimension(self) -> int:
        return self.states.shape[1]

    @property
    def duration(self) -> float:
        return (len(self.states) - 1) * self.dt

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(len(self.states))

    def write_csv(self, path) -> None:
        """Write `t,x1,...,xk` rows with full float64 precision."""
        with open(path, "w", encoding="utf-8", newline="") as fh:
            write_trajectory_csv(self, fh)


def write_trajectory_csv(traj: Trajectory, fh) -> None:
    header = "t," + ",".join(f"x{i + 1}" for i in range(traj.dimension))
    fh.write(header + "\n")
    times = traj.times
    for i in range(len(traj)):
        row = [format(times[i], ".17g")]
        row.extend(format(v, ".17g") for v in traj.states[i])
        fh.write(",".join(row) + "\n")


@dataclass(frozen=True)
class ShiftSpec:
    """Translation of a trajectory: every state moves by magnitude*direction."""

    direction: np.ndarray
    magnitude: float

    def __post_init__(self):
        direction = np.asarray(self.direction, dtype=np.float64)
        if direction.ndim != 1:
            raise ContractViolationError("shift direction must be a 1-D vector")
        if not np.any(direction != 0.0):
            raise ContractViolationError("shift direction must be nonzero")
        object.__setattr__(self, "direction", direction)


def derivative(spec: AttractorSpec, state: np.ndarray) -> np.ndarray:
    """Time derivative of the attractor system at `state`."""
    state = _check_state(spec, state)
    if spec.kind is AttractorKind.LIMIT_CYCLE:
        return _limit_cycle_derivative(state)
    return _lorenz_derivative(state)


def analytic_jacobian(spec: AttractorSpec, state: np.ndarray) -> np.ndarray:
    """Jacobian matrix of the vector field at `state`."""
    state = _check_state(spec, state)
    if spec.kind is AttractorKind.LIMIT_CYCLE:
        return _limit_cycle_jacobian(state)
    return _lorenz_jacobian(state)


def _check_state(spec: AttractorSpec, state: np.ndarray) -> np.ndarray:
    state = np.asarray(state, dtype=np.float64)
    if state.shape != (spec.dimension,):
        raise ContractViolationError(
            f"{spec.kind.value} state must have shape ({spec.dimension},), "
            f"got {state.shape}"
        )
    return state


def _limit_cycle_derivative(s: np.ndarray) -> np.ndarray:
    x1, x2 = s
    radial = CYCLE_RATE * (CYCLE_RADIUS_SQ - x1 * x1 - x2 * x2)
    return np.array([x1 * radial - CYCLE_RATE * x2, x2 * radial + CYCLE_RATE * x1])


def _limit_cycle_jacobian(s: np.ndarray) -> np.ndarray:
    x1, x2 = s
    radial = CYCLE_RATE * (CYCLE_RADIUS_SQ - x1 * x1 - x2 * x2)
    cross = 2.0 * CYCLE_RATE * x1 * x2
    return np.array(
        [
            [radial - 2.0 * CYCLE_RATE * x1 * x1, -cross - CYCLE_RATE],
            [-cross + CYCLE_RATE, radial - 2.0 * CYCLE_RATE * x2 * x2],
        ]
    )


def _lorenz_derivative(s: np.ndarray) -> np.ndarray:
    x1, x2, x3 = s
    return np.array(
        [
            -LORENZ_SIGMA * (x1 - x2),
            LORENZ_RHO * x1 - x2 - x1 * x3,
            -LORENZ_BETA * x3 + x1 * x2,
        ]
    )


def _lorenz_jacobian(s: np.ndarray) -> np.ndarray:
    x1, x2, x3 = s
    return np.array(
        [
            [-LORENZ_SIGMA, LORENZ_SIGMA, 0.0],
            [LORENZ_RHO - x3, -1.0, -x1],
            [x2, x1, -LORENZ_BETA],
        ]
    )


def rk4_step(f, x: np.ndarray, dt: float) -> np.ndarray:
    """One classical fixed-step RK4 update of x' = f(x)."""
    k1 = f(x)
    k2 = f(x + 0.5 * dt * k1)
    k3 = f(x + 0.5 * dt * k2)
    k4 = f(x + dt * k3)
    return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def state_diverged(x: np.ndarray) -> bool:
    return not np.all(np.isfinite(x)) or np.max(np.abs(x)) > BLOWUP_LIMIT


def integrate(
    spec: AttractorSpec,
    x0: np.ndarray,
    dt: float,
    n_steps: int,
    t0: float = 0.0,
) -> Trajectory:
    """Fixed-step RK4 trajectory of length n_steps+1 starting at x0."""
    x0 = _check_state(spec, x0)
    if not dt > 0:
        raise ContractViolationError(f"dt must be positive, got {dt}")
    if n_steps < 1:
        raise ContractViolationError(f"n_steps must be >= 1, got {n_steps}")

    if spec.kind is AttractorKind.LIMIT_CYCLE:
        f = _limit_cycle_derivative
    else:
        f = _lorenz_derivative

    states = np.empty((n_steps + 1, spec.dimension))
    x = x0
    if state_diverged(x):
        raise DivergenceError("initial state is already divergent", step_index=0)
    states[0] = x
    for i in range(1, n_steps + 1):
        x = rk4_step(f, x, dt)
        if state_diverged(x):
            raise DivergenceError(
                f"{spec.kind.value} state diverged at step {i}", step_index=i
            )
        states[i] = x
    return Trajectory(states=states, dt=dt, t0=t0)


def shift(traj: Trajectory, spec: ShiftSpec) -> Trajectory:
    """Translate every state by magnitude*direction; dt and t0 are unchanged."""
    if spec.direction.shape[0] != traj.dimension:
        raise ContractViolationError(
            f"shift direction has dimension {spec.direction.shape[0]}, "
            f"trajectory has {traj.dimension}"
        )
    offset = spec.magnitude * spec.direction
    return Trajectory(states=traj.states + offset[None, :], dt=traj.dt, t0=traj.t0)
