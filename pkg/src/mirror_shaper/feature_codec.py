"""Tile coding: continuous (EMG, joint angle) state -> sparse binary features.

Coarse coding with `num_tilings` uniformly offset grids. Each tiling owns a
private block of (tiles_per_dim + 1)**ndim cells, so the active indices are
distinct by construction and no hashing collisions exist. Encoding is a pure
function of (config, state); out-of-bounds states are clamped.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConfigurationError

JOINT_ANGLE_MIN = 0.0349
JOINT_ANGLE_MAX = 1.5446

DEFAULT_BOUNDS = ((0.0, 1.0), (JOINT_ANGLE_MIN, JOINT_ANGLE_MAX))


@dataclass(frozen=True)
class TileCoderConfig:
    num_tilings: int = 8
    tiles_per_dim: int = 8
    bounds_per_dim: tuple = DEFAULT_BOUNDS
    memory_size: int = 8 * (8 + 1) ** 2
    seed: int = 0
    random_offsets: bool = False

    def __post_init__(self):
        if self.num_tilings < 1:
            raise ConfigurationError("num_tilings must be >= 1")
        if self.tiles_per_dim < 1:
            raise ConfigurationError("tiles_per_dim must be >= 1")
        bounds = tuple(tuple(b) for b in self.bounds_per_dim)
        object.__setattr__(self, "bounds_per_dim", bounds)
        if not bounds:
            raise ConfigurationError("bounds_per_dim must not be empty")
        for lo, hi in bounds:
            if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
                raise ConfigurationError(f"invalid dimension bounds ({lo}, {hi})")
        if self.memory_size < self.min_memory_size:
            raise ConfigurationError(
                f"memory_size {self.memory_size} below minimum {self.min_memory_size} "
                f"for {self.num_tilings} tilings of ({self.tiles_per_dim}+1)^{self.ndim} cells"
            )

    @property
    def ndim(self):
        return len(self.bounds_per_dim)

    @property
    def min_memory_size(self):
        return self.num_tilings * (self.tiles_per_dim + 1) ** self.ndim


@dataclass(frozen=True)
class FeatureVector:
    """Active tile indices; exactly one per tiling, all distinct."""

    active_indices: np.ndarray

    def __len__(self):
        return len(self.active_indices)

    def dot(self, weights):
        """Reference dot product: sum of weights at the active indices."""
        return _kernels.dot_at(weights, self.active_indices)


class TileCoder:
    """Immutable encoder; safe to share read-only across parallel trials."""

    def __init__(self, config: TileCoderConfig):
        self.config = config
        ndim = config.ndim
        self._lows = np.array([b[0] for b in config.bounds_per_dim], dtype=np.float64)
        widths = np.array(
            [(b[1] - b[0]) / config.tiles_per_dim for b in config.bounds_per_dim],
            dtype=np.float64,
        )
        self._inv_widths = 1.0 / widths
        if config.random_offsets:
            rng = np.random.default_rng(np.random.SeedSequence(config.seed))
            offsets = rng.random((config.num_tilings, ndim))
        else:
            offsets = np.repeat(
                np.arange(config.num_tilings, dtype=np.float64)[:, None] / config.num_tilings,
                ndim,
                axis=1,
            )
        self._offsets = offsets
        for arr in (self._lows, self._inv_widths, self._offsets):
            arr.flags.writeable = False

    @property
    def num_active(self):
        return self.config.num_tilings

    @property
    def memory_size(self):
        return self.config.memory_size

    @property
    def offsets(self):
        return self._offsets

    def encode(self, state) -> FeatureVector:
        """Encode a state tuple; components are clamped to the configured bounds."""
        out = np.empty(self.config.num_tilings, dtype=np.int64)
        self.encode_into(state, out)
        out.flags.writeable = False
        return FeatureVector(out)

    def encode_into(self, state, out, scratch=None):
        """Hot-path variant writing indices into a preallocated int64 array.

        Callers in tight loops pass their own float64 scratch of length ndim;
        the coder itself stays stateless so it can be shared across trials.
        """
        point = scratch if scratch is not None else np.empty(self.config.ndim, dtype=np.float64)
        for d, value in enumerate(state):
            if not math.isfinite(value):
                raise ValueError(f"non-finite state component in dimension {d}: {value!r}")
            point[d] = value
        _kernels.encode(
            point, self._lows, self._inv_widths, self._offsets, self.config.tiles_per_dim, out
        )
        return out


def new_tile_coder(config: TileCoderConfig) -> TileCoder:
    return TileCoder(config)
