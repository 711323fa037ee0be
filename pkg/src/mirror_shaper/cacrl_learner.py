"""Continuous actor-critic learner with eligibility traces.

Gaussian policy over a 1-D displacement action, linear in sparse binary
features: mean = w_mu.x(s), stddev = max(sigma_min, exp(w_sigma.x(s))).
The critic trace is decayed by lambda_v * gamma and capped elementwise at 1;
actor traces decay by lambda_w. Rewards arrive already shaped (MDP plus
human term summed by shape_reward).

Update order per step: TD error, critic trace, critic weights, mean trace,
mean weights, stddev trace, stddev weights. The stddev used in the trace
increment is the clamped value, i.e. the one the action was sampled with.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConfigurationError, DivergenceError

SIGMA_MIN_DEFAULT = 0.01
NUM_TILINGS_DEFAULT = 8


@dataclass(frozen=True)
class LearnerConfig:
    alpha_v: float = 0.1 / NUM_TILINGS_DEFAULT
    alpha_mu: float = 0.01 / NUM_TILINGS_DEFAULT
    alpha_sigma: float = 0.01 / NUM_TILINGS_DEFAULT
    gamma: float = 0.9
    lambda_w: float = 0.3
    lambda_v: float = 0.7
    sigma_min: float = SIGMA_MIN_DEFAULT

    def __post_init__(self):
        for name in ("alpha_v", "alpha_mu", "alpha_sigma"):
            if getattr(self, name) <= 0.0:
                raise ConfigurationError(f"{name} must be > 0")
        if not 0.0 <= self.gamma < 1.0:
            raise ConfigurationError("gamma must be in [0, 1)")
        for name in ("lambda_w", "lambda_v"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigurationError(f"{name} must be in [0, 1]")
        if self.sigma_min <= 0.0:
            raise ConfigurationError("sigma_min must be > 0")


class LearnerState:
    """Actor/critic weight and trace vectors, all zero-initialized.

    Single-owner: mutated only by its trial loop, never shared.
    """

    __slots__ = ("w_mu", "w_sigma", "v", "e_mu", "e_sigma", "e_v")

    def __init__(self, memory_size: int):
        if memory_size < 1:
            raise ConfigurationError("memory_size must be >= 1")
        self.w_mu = np.zeros(memory_size, dtype=np.float64)
        self.w_sigma = np.zeros(memory_size, dtype=np.float64)
        self.v = np.zeros(memory_size, dtype=np.float64)
        self.e_mu = np.zeros(memory_size, dtype=np.float64)
        self.e_sigma = np.zeros(memory_size, dtype=np.float64)
        self.e_v = np.zeros(memory_size, dtype=np.float64)

    @property
    def memory_size(self):
        return len(self.v)

    def weights_finite(self):
        return bool(
            np.isfinite(self.w_mu).all()
            and np.isfinite(self.w_sigma).all()
            and np.isfinite(self.v).all()
        )


@dataclass(frozen=True)
class ActionSample:
    mu: float
    sigma: float
    action: float


def policy_stats(state: LearnerState, config: LearnerConfig, x) -> tuple:
    """Return (mu, sigma) at features x; sigma is clamped from below.

    Non-finite weight sums (or an exp overflow) mean the weights have run
    away; that is reported as divergence so the trial aborts cleanly.
    """
    idx = x.active_indices
    mu = _kernels.dot_at(state.w_mu, idx)
    s_raw = _kernels.dot_at(state.w_sigma, idx)
    if not (math.isfinite(mu) and math.isfinite(s_raw)):
        raise DivergenceError("non-finite policy weights")
    try:
        sigma = math.exp(s_raw)
    except OverflowError:
        raise DivergenceError(f"policy stddev overflow (w_sigma.x = {s_raw})") from None
    if sigma < config.sigma_min:
        sigma = config.sigma_min
    return mu, sigma


def sample_action(mu: float, sigma: float, rng) -> ActionSample:
    """Draw a ~ N(mu, sigma^2) from the trial's seeded stream."""
    return ActionSample(mu=mu, sigma=sigma, action=float(rng.normal(mu, sigma)))


def td_error(state: LearnerState, r: float, x, x_next, gamma: float) -> float:
    delta = r + gamma * _kernels.dot_at(state.v, x_next.active_indices) - _kernels.dot_at(
        state.v, x.active_indices
    )
    if not math.isfinite(delta):
        raise DivergenceError("non-finite TD error")
    return delta


def update(
    state: LearnerState,
    config: LearnerConfig,
    x,
    x_next,
    action_sample: ActionSample,
    r_shaped: float,
) -> float:
    """Apply one full actor-critic update in place; returns the TD error."""
    delta = _kernels.update_step(
        state.w_mu,
        state.w_sigma,
        state.v,
        state.e_mu,
        state.e_sigma,
        state.e_v,
        x.active_indices,
        x_next.active_indices,
        action_sample.action,
        action_sample.mu,
        action_sample.sigma,
        r_shaped,
        config.alpha_v,
        config.alpha_mu,
        config.alpha_sigma,
        config.gamma,
        config.lambda_w,
        config.lambda_v,
    )
    if not math.isfinite(delta):
        raise DivergenceError("non-finite TD error")
    return delta


def shape_reward(r_mdp: float, h: float) -> float:
    """MDP reward and human reward are directly summed."""
    return r_mdp + h
