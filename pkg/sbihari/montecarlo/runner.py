"""Trial loops over reproducible stream blocks."""

import logging
from typing import Callable, Dict, Optional

import numpy as np

from sbihari.objects import LevyConfig
from sbihari.simulation import RngStream, SdeModel, euler_simulate, generate, map_blocks

logger = logging.getLogger(__name__)

BlockFn = Callable[[RngStream, int], Dict[str, np.ndarray]]


def run_trials(
    block_fn: BlockFn, trials: int, base_seed: int, purpose: str, workers: int = 1
) -> Dict[str, np.ndarray]:
    """Runs block_fn over all trial blocks and concatenates its per-trial arrays.

    Args:
        block_fn: Receives a block's stream and size and returns a dict of
            arrays whose first axis is the trial axis.
        trials: Total number of trials.
        base_seed: Base seed of the block streams.
        purpose: Purpose tag of the streams.
        workers: Worker threads.

    Returns:
        Dict of arrays over all trials, in trial order.
    """
    blocks = map_blocks(block_fn, trials, base_seed, purpose, workers)
    return {key: np.concatenate([block[key] for block in blocks]) for key in blocks[0]}


def simulate_trials(
    model: SdeModel,
    levy: LevyConfig,
    n_per_unit: int,
    T: float,
    trials: int,
    base_seed: int,
    cap_R: Optional[float] = None,
    workers: int = 1,
    keep_paths: bool = False,
) -> Dict[str, np.ndarray]:
    """Euler runs of `trials` independent trials of a model.

    Returns:
        Dict with per-trial "exit_flag", "sup_abs_X", "X_T" (first component),
        "X_T_norm", "cell_remainder" and, with keep_paths, "paths" (trial, node, d).
    """

    def block(stream: RngStream, size: int) -> Dict[str, np.ndarray]:
        driver = generate(levy, n_per_unit, T, stream, size)
        run = euler_simulate(model, driver, cap_R, seed=base_seed)
        out = {
            "exit_flag": run.exit_flags,
            "sup_abs_X": run.sup_abs(),
            "X_T": run.X_T()[:, 0],
            "X_T_norm": np.linalg.norm(run.X_T(), axis=1),
            "cell_remainder": run.cell_remainder,
        }
        if keep_paths:
            out["paths"] = run.values
        return out

    logger.info(f"Simulating {trials} trial(s) of model '{model.name}' at n={n_per_unit}, T={T}")
    return run_trials(block, trials, base_seed, f"simulate:{model.name}", workers)
