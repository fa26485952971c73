"""Seeded random trials of the coding theorems, sharded across worker threads"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from app.core import settings
from app.core.exceptions import DomainError
from app.core.logging import get_logger
from app.models.coding import CodeCheckRow
from app.models.distribution import Distribution
from app.models.logkind import LogKind
from app.services.coding import ideal_lengths, kraft_sum, theorem1_gap, theorem2_check

logger = get_logger("services.fuzz")

# Gap tolerance for the equality case with ideal lengths
GAP_TOL = 1e-12
KRAFT_TOL = 1e-12
CPRIME_RANGE = (1.0, 10.0)
SHARD_SIZE = 100


def random_distribution(rng: np.random.Generator, n: int) -> Distribution:
    """A Dirichlet(1, ..., 1) draw with strictly positive entries."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    probs = rng.dirichlet(np.ones(n))
    probs = np.maximum(probs, 1e-300)
    probs = probs / probs.sum()
    return Distribution.from_probs(probs.tolist())


def _kraft_ok(kind: LogKind, value: float) -> bool:
    if kind is LogKind.MINUS:
        return value <= 1.0 + KRAFT_TOL
    if kind is LogKind.PLUS:
        return value >= 1.0 - KRAFT_TOL
    return abs(value - 1.0) <= KRAFT_TOL


def check_trial(kind: LogKind, p: Distribution, cprime: float, seed: int) -> CodeCheckRow:
    """Ideal-length gap, Kraft law and the c'-inequality for one distribution."""
    lengths = ideal_lengths(kind, p)
    gap = theorem1_gap(kind, p, lengths)
    ksum = kraft_sum(lengths)
    holds = abs(gap) <= GAP_TOL and _kraft_ok(kind, ksum) and theorem2_check(kind, p, cprime).holds
    return CodeCheckRow(kind=kind, n=len(p), seed=seed, gap=gap, kraft_sum=ksum, holds=holds)


def _run_shard(seed: int, count: int, n_max: int, kinds: Sequence[LogKind]) -> List[CodeCheckRow]:
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        p = random_distribution(rng, n)
        cprime = float(rng.uniform(*CPRIME_RANGE))
        for kind in kinds:
            rows.append(check_trial(kind, p, cprime, seed))
    return rows


def run_codecheck_trials(
    count: int,
    n_max: int = 16,
    seed: int = 42,
    threads: Optional[int] = None,
    kinds: Sequence[LogKind] = (LogKind.NATURAL, LogKind.PLUS, LogKind.MINUS),
) -> List[CodeCheckRow]:
    """Run count random trials per kind.

    Trials are cut into shards of SHARD_SIZE; shard i draws from
    default_rng(seed + i) and results are concatenated in shard order, so the
    output does not depend on the worker count.
    """
    if count < 0:
        raise DomainError(f"count must be nonnegative, got {count}")
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    workers = max(1, threads or settings.THREADS)
    sizes = [min(SHARD_SIZE, count - start) for start in range(0, count, SHARD_SIZE)]
    shards = len(sizes)

    if workers == 1 or shards <= 1:
        results = [_run_shard(seed + i, size, n_max, kinds) for i, size in enumerate(sizes)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_shard, seed + i, size, n_max, kinds) for i, size in enumerate(sizes)]
            results = [future.result() for future in futures]

    rows = [row for shard in results for row in shard]
    failures = sum(1 for row in rows if not row.holds)
    logger.debug(f"{len(rows)} code checks over {shards} shards, {failures} failures")
    return rows
