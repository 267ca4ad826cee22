"""
Seeded trial sweeps.

Trial i always receives the same derived seed, so results do not depend on
whether the sweep runs serially or on a thread pool.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, TypeVar

import numpy as np

T = TypeVar("T")


def trial_seeds(seed: int, trials: int) -> List[int]:
    """Independent per-trial seeds derived from one root seed."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(child.generate_state(1)[0]) for child in children]


def sweep(fn: Callable[[int], T], seed: int, trials: int, parallel: bool = False) -> List[T]:
    """Run fn once per derived trial seed, results in trial order."""
    seeds = trial_seeds(seed, trials)
    if parallel and trials > 1:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(fn, seeds))
    return [fn(s) for s in seeds]


def sweep_max(fn: Callable[[int], float], seed: int, trials: int, parallel: bool = False) -> float:
    """max over trials of fn(trial_seed); 0.0 for an empty sweep."""
    return max(sweep(fn, seed, trials, parallel), default=0.0)
