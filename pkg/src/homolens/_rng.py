"""Deterministic random-stream derivation.

A single user-facing seed fans out into independent streams through a
counter-based generator (Philox) keyed on (seed, stream tags), so e.g.
manifold draws and noise draws never share state.
"""
from __future__ import annotations

import numpy as np

# stream tags
MANIFOLD = 1
NOISE = 2
RESAMPLE = 3
TUBE_REJECT = 4


def rng_for(seed: int, *streams: int) -> np.random.Generator:
    """Return a generator for the given seed and stream-tag path."""
    ss = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1),
                                spawn_key=tuple(int(s) for s in streams))
    return np.random.Generator(np.random.Philox(ss))


def trial_seed(base_seed: int, n: int, trial_index: int) -> int:
    """Derive a per-trial seed from the experiment base seed."""
    ss = np.random.SeedSequence(entropy=int(base_seed) & (2**64 - 1),
                                spawn_key=(int(n), int(trial_index)))
    return int(ss.generate_state(1, dtype=np.uint64)[0])
