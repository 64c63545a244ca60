"""Seeded, splittable random streams.

Every simulation component (market flow, policy sampling, parameter init,
evaluation episodes) owns its own ``RngStream`` identified by a
``(seed, stream_id)`` pair.  Streams are backed by the counter-based Philox
bit generator keyed through ``SeedSequence(seed, spawn_key=(stream_id,))``,
so distinct stream ids give statistically independent sequences and the
same pair replays bit-identically on any platform.

Stream-id blocks (spaced far apart so purposes never collide):
"""

from __future__ import annotations

import numpy as np

# stream-id allocation: one block per purpose
STREAM_INIT = 0          # network parameter initialisation
STREAM_LEARNER = 1       # minibatch shuffling during PPO updates
STREAM_WORKER_ENV = 1 << 20      # + worker index: market dynamics
STREAM_WORKER_POLICY = 2 << 20   # + worker index: action sampling
STREAM_EVAL = 3 << 20            # + episode index: evaluation episodes
STREAM_SIM = 4 << 20             # market-only simulation runs


class RngStream:
    """A stateful draw stream addressed by (seed, stream_id).

    Thin wrapper over ``numpy.random.Generator``; draws advance the stream.
    Re-creating a stream with the same pair restarts the identical sequence.
    """

    def __init__(self, seed: int, stream_id: int = 0):
        if seed < 0 or stream_id < 0:
            raise ValueError("seed and stream_id must be non-negative")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        self._gen = np.random.Generator(np.random.Philox(ss))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    def split(self, stream_id: int) -> "RngStream":
        """Independent sibling stream under the same seed."""
        return RngStream(self.seed, stream_id)

    # draw helpers (all advance the stream)

    def random(self, size=None):
        return self._gen.random(size)

    def normal(self, size=None):
        return self._gen.standard_normal(size)

    def poisson(self, lam: float):
        return int(self._gen.poisson(lam))

    def integers(self, low: int, high: int, size=None):
        return self._gen.integers(low, high, size=size)

    def shuffled_indices(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)

    # state capture for exact checkpoint/resume

    def state(self) -> dict:
        return self._gen.bit_generator.state

    def set_state(self, state: dict) -> None:
        self._gen.bit_generator.state = state
