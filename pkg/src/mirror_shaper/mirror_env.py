"""Self-mirrored movement task.

A preprogrammed sinusoidal target elbow trajectory plays on one arm; the
learner displaces the other arm's joint by a clipped action each step. State
observed by the learner is (synthetic EMG, own joint angle) - the target
angle itself is never observable, it reaches the learner only through reward.

Reward: +1 when the post-step angular error is within delta_theta_max,
otherwise -error_scale * |error|.

The synthetic EMG channel mimics a filtered, time-averaged muscle signal for
the target movement: the target trajectory rescaled to [0, 1], plus Gaussian
noise per step, smoothed by a 5-step moving average and clamped to [0, 1].
"""

import math
from collections import deque
from dataclasses import dataclass

from .errors import ConfigurationError
from .feature_codec import JOINT_ANGLE_MAX, JOINT_ANGLE_MIN

EMG_SMOOTHING_WINDOW = 5
TRAJECTORY_AMPLITUDE_FRACTION = 0.9


@dataclass(frozen=True)
class EnvConfig:
    theta_min: float = JOINT_ANGLE_MIN
    theta_max: float = JOINT_ANGLE_MAX
    delta_theta_max: float = 0.1
    action_clip: float = 0.1
    period_steps: int = 200
    emg_noise_std: float = 0.28
    error_scale: float = 1.0
    step_hz: float = 33.0  # nominal; simulation is step-indexed, live mode paces

    def __post_init__(self):
        if self.theta_min >= self.theta_max:
            raise ConfigurationError("theta_min must be < theta_max")
        if self.delta_theta_max <= 0.0:
            raise ConfigurationError("delta_theta_max must be > 0")
        if self.action_clip <= 0.0:
            raise ConfigurationError("action_clip must be > 0")
        if self.period_steps < 1:
            raise ConfigurationError("period_steps must be >= 1")
        if self.emg_noise_std < 0.0:
            raise ConfigurationError("emg_noise_std must be >= 0")
        if self.error_scale <= 0.0:
            raise ConfigurationError("error_scale must be > 0")

    @property
    def theta_mid(self):
        return 0.5 * (self.theta_min + self.theta_max)

    @property
    def theta_range(self):
        return self.theta_max - self.theta_min


@dataclass(frozen=True)
class EnvState:
    """Immutable snapshot; safe to hand to loggers and live-session fan-out."""

    step_index: int
    theta_agent: float
    theta_target: float
    emg_value: float


def target_angle(config: EnvConfig, step: int) -> float:
    """Preprogrammed trajectory: sine covering 90% of the joint range."""
    amp = 0.5 * TRAJECTORY_AMPLITUDE_FRACTION * config.theta_range
    return config.theta_mid + amp * math.sin(2.0 * math.pi * step / config.period_steps)


class EmgStream:
    """Per-trial EMG synthesizer: one raw sample per step, sliding 5-step mean."""

    def __init__(self, config: EnvConfig, rng):
        self._config = config
        self._rng = rng
        self._raws = deque(maxlen=EMG_SMOOTHING_WINDOW)

    def sample(self, step: int) -> float:
        cfg = self._config
        raw = (target_angle(cfg, step) - cfg.theta_min) / cfg.theta_range
        raw += self._rng.normal(0.0, cfg.emg_noise_std)
        self._raws.append(raw)
        mean = sum(self._raws) / len(self._raws)
        return min(max(mean, 0.0), 1.0)


def emg_sample(config: EnvConfig, step: int, rng) -> float:
    """Reference sampler: replays a fresh stream up to `step` and returns its value.

    The environment uses a persistent EmgStream so consecutive steps share the
    raw samples inside the moving-average window; this helper reproduces the
    same definition for tests that need a standalone draw.
    """
    if step < 0:
        raise ValueError("step must be >= 0")
    stream = EmgStream(config, rng)
    for s in range(step):
        stream.sample(s)
    return stream.sample(step)


class MirrorEnv:
    """Step-indexed environment instance; one per trial, never shared."""

    def __init__(self, config: EnvConfig):
        self.config = config
        self._stream = None
        self._state = None

    @property
    def state(self) -> EnvState:
        return self._state

    def reset(self, rng) -> EnvState:
        """Start a trial: agent at mid-range, target at phase 0, EMG reseeded."""
        cfg = self.config
        self._stream = EmgStream(cfg, rng)
        self._state = EnvState(
            step_index=0,
            theta_agent=cfg.theta_mid,
            theta_target=target_angle(cfg, 0),
            emg_value=self._stream.sample(0),
        )
        return self._state

    def step(self, action: float) -> tuple:
        """Apply a clipped displacement; returns (new state, MDP reward)."""
        if not math.isfinite(action):
            raise ValueError(f"non-finite action: {action!r}")
        cfg = self.config
        prev = self._state
        disp = min(max(action, -cfg.action_clip), cfg.action_clip)
        theta = min(max(prev.theta_agent + disp, cfg.theta_min), cfg.theta_max)
        step_index = prev.step_index + 1
        theta_target = target_angle(cfg, step_index)
        err = abs(theta - theta_target)
        r_mdp = 1.0 if err <= cfg.delta_theta_max else -cfg.error_scale * err
        self._state = EnvState(
            step_index=step_index,
            theta_agent=theta,
            theta_target=theta_target,
            emg_value=self._stream.sample(step_index),
        )
        return self._state, r_mdp


def observe(state: EnvState) -> tuple:
    """The learner's view: (EMG, own joint angle). Never the target."""
    return (state.emg_value, state.theta_agent)
