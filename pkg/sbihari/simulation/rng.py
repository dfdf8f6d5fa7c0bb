"""Reproducible random streams keyed by (base_seed, trial_index, purpose).

Streams are numpy Philox generators (counter-based) seeded through a
SeedSequence whose spawn key carries the trial index and a CRC32 of the
purpose tag. Trials are processed in fixed blocks of BLOCK_SIZE; a block's
stream is keyed by the index of its first trial, so outputs never depend on
how blocks are spread over workers.
"""

import logging
import zlib
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Tuple, TypeVar

import numpy as np

from sbihari.exceptions import ArgumentError

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1024
MAX_SEED = 2**64 - 1

T = TypeVar("T")


class RngStream:
    """A Philox stream for one (base_seed, trial_index, purpose) key.

    Gaussians come from numpy's Generator.normal, Poisson counts from
    Generator.poisson and uniforms from Generator.random.
    """

    def __init__(self, base_seed: int, trial_index: int = 0, purpose: str = "main"):
        if not 0 <= int(base_seed) <= MAX_SEED:
            raise ArgumentError(f"base_seed={base_seed} must be a 64-bit unsigned integer")
        if trial_index < 0:
            raise ArgumentError(f"trial_index={trial_index} must be non-negative")
        self.base_seed = int(base_seed)
        self.trial_index = int(trial_index)
        self.purpose = purpose
        seq = np.random.SeedSequence(
            self.base_seed, spawn_key=(self.trial_index, zlib.crc32(purpose.encode("utf-8")))
        )
        self.generator = np.random.Generator(np.random.Philox(seq))

    def normal(self, scale: float, size) -> np.ndarray:
        return self.generator.normal(0.0, scale, size=size)

    def poisson(self, lam, size) -> np.ndarray:
        return self.generator.poisson(lam, size=size)

    def uniform(self, size) -> np.ndarray:
        return self.generator.random(size=size)

    def choice(self, values, probs, size) -> np.ndarray:
        return self.generator.choice(np.asarray(values, dtype=float), p=probs, size=size)

    def __repr__(self):
        return (
            f"RngStream(base_seed={self.base_seed}, trial_index={self.trial_index}, "
            f"purpose='{self.purpose}')"
        )


def trial_blocks(trials: int, block_size: int = BLOCK_SIZE) -> Iterator[Tuple[int, int]]:
    """Yields (first_trial_index, size) for consecutive blocks covering `trials`."""
    if trials < 1:
        raise ArgumentError(f"trials={trials} must be positive")
    for start in range(0, trials, block_size):
        yield start, min(block_size, trials - start)


def map_blocks(
    fn: Callable[[RngStream, int], T],
    trials: int,
    base_seed: int,
    purpose: str,
    workers: int = 1,
) -> List[T]:
    """Runs fn(stream, block_size) for every trial block, in block order.

    Args:
        fn: Block simulator; receives the block's stream and its trial count.
        trials: Total trials.
        base_seed: Base seed of all streams.
        purpose: Purpose tag separating independent uses of the same seed.
        workers: Worker threads (wall time only).

    Returns:
        The per-block results in block order.
    """
    blocks = list(trial_blocks(trials))

    def run(block: Tuple[int, int]) -> T:
        start, size = block
        return fn(RngStream(base_seed, start, purpose), size)

    logger.debug(f"Running {trials} trials in {len(blocks)} blocks on {workers} worker(s)")
    if workers <= 1 or len(blocks) == 1:
        return [run(block) for block in blocks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, blocks))
