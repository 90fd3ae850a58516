import time

import pytest

from framegeo.experiments import random_subspace, trial_seed, verify_volume_bounds

# every (n, k) pair with n <= 8, k <= 4 that gives a proper subspace
BATCH_PAIRS = [(n, k) for n in range(2, 9) for k in range(1, min(4, n - 1) + 1)]
BATCH_TRIALS = 500
BATCH_MASTER_SEED = 1729


@pytest.fixture(scope="session")
def random_batch():
    """500 full volume reports on Haar-random subspaces, shared by the
    acceptance criteria; returns (reports, elapsed_seconds)."""
    start = time.perf_counter()
    reports = []
    for t in range(BATCH_TRIALS):
        n, k = BATCH_PAIRS[t % len(BATCH_PAIRS)]
        seed = trial_seed(BATCH_MASTER_SEED, t)
        reports.append(verify_volume_bounds(random_subspace(n, k, seed),
                                            trial_id=t, seed=seed))
    return reports, time.perf_counter() - start
