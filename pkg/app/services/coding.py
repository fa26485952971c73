"""Code lengths, Kraft sums, noiseless coding theorem checks and weighted complexities"""

import heapq
import math
from typing import Iterable, List, Sequence

from app.core.exceptions import DomainError, InversionError
from app.core.logging import get_logger
from app.models.coding import CodeLengths, CodeSource, CostFunction, CostKind, Theorem2Result
from app.models.distribution import Distribution
from app.models.logkind import LogKind
from app.models.run_config import LN2
from app.services.efflog import eff_log
from app.services.entropy import entropy

logger = get_logger("services.coding")

KRAFT_SLACK = 1e-12


def _check_arity(p: Distribution, lengths: CodeLengths) -> None:
    if len(p) != len(lengths):
        raise DomainError(
            f"{len(lengths)} code lengths for {len(p)} outcomes",
            context={"outcomes": len(p), "lengths": len(lengths)},
        )


def ideal_lengths(kind: LogKind, p: Distribution) -> CodeLengths:
    """Lengths -eff_log(kind, p(x)) that make the coding gap vanish."""
    zeros = [label for label, pi in zip(p.outcomes, p.probs) if pi == 0.0]
    if zeros:
        raise DomainError(
            "ideal lengths need every probability to be positive",
            context={"zero_outcomes": zeros},
        )
    return CodeLengths(
        lengths=tuple(-eff_log(kind, pi) for pi in p.probs),
        source=CodeSource.IDEAL,
        kind=kind,
    )


def integer_bit_lengths(bits: Sequence[int]) -> CodeLengths:
    """Integer codeword lengths in bits, stored in natural units."""
    return CodeLengths(lengths=tuple(b * LN2 for b in bits), source=CodeSource.INTEGER_BITS)


def user_lengths(values: Sequence[float]) -> CodeLengths:
    return CodeLengths(lengths=tuple(float(v) for v in values), source=CodeSource.USER_SUPPLIED)


def kraft_sum(lengths: CodeLengths) -> float:
    return math.fsum(math.exp(-l) for l in lengths.lengths)


def kraft_lengths_feasible(lengths: CodeLengths) -> bool:
    """True when a prefix code with these lengths can exist."""
    return kraft_sum(lengths) <= 1.0 + KRAFT_SLACK


def expected_length(p: Distribution, lengths: CodeLengths) -> float:
    _check_arity(p, lengths)
    return math.fsum(pi * li for pi, li in zip(p.probs, lengths.lengths))


def theorem1_gap(kind: LogKind, p: Distribution, lengths: CodeLengths) -> float:
    """Expected length minus the generalized entropy; nonnegative for dominating lengths."""
    return expected_length(p, lengths) - entropy(kind, p)


def _phi(phi: CostFunction, t: float) -> float:
    return math.expm1(phi.rate * t) / phi.rate


def weighted_complexity(p: Distribution, ks: CodeLengths, phi: CostFunction) -> float:
    """Nagumo-Kolmogorov average phi^-1(sum p(x) phi(ks[x])).

    Raises:
        InversionError: if the averaged cost lies outside the range of phi
    """
    if phi.tag is CostKind.IDENTITY:
        return expected_length(p, ks)
    _check_arity(p, ks)
    mean = math.fsum(pi * _phi(phi, k) for pi, k in zip(p.probs, ks.lengths))
    argument = phi.rate * mean
    if not argument > -1.0:
        raise InversionError(
            f"averaged cost {mean!r} is outside the range of the exponential cost with rate {phi.rate!r}",
            context={"mean": mean, "rate": phi.rate},
        )
    return math.log1p(argument) / phi.rate


def theorem2_check(kind: LogKind, p: Distribution, cprime: float) -> Theorem2Result:
    """0 <= (c' - 1) H(p) <= c' sum_x (-eff_log(kind, p(x)))."""
    if math.isnan(cprime) or cprime < 1.0:
        raise DomainError(f"c' must be at least 1, got {cprime!r}")
    lengths = ideal_lengths(kind, p)
    mid = (cprime - 1.0) * entropy(kind, p)
    rhs = cprime * math.fsum(lengths.lengths)
    holds = -KRAFT_SLACK <= mid <= rhs + KRAFT_SLACK * max(1.0, abs(rhs))
    return Theorem2Result(kind=kind, cprime=cprime, lhs=0.0, mid=mid, rhs=rhs, holds=holds)


def theorem2_two_point_scan(
    kind: LogKind,
    ys: Iterable[float],
    cprimes: Iterable[float],
) -> List[Theorem2Result]:
    """theorem2_check over the two-point distributions {y, 1 - y}."""
    cprimes = list(cprimes)
    results = []
    for y in ys:
        p = Distribution.from_probs([y, 1.0 - y])
        for cprime in cprimes:
            results.append(theorem2_check(kind, p, cprime))
    failed = sum(1 for r in results if not r.holds)
    logger.debug(f"two-point scan {kind.value}: {len(results)} checks, {failed} failed")
    return results


def huffman_bit_lengths(p: Distribution) -> CodeLengths:
    """Huffman codeword lengths, ties broken by (weight, smallest label in the subtree).

    The lengths assigned to each label do not depend on the order the outcomes are listed in.
    """
    if len(p) == 1:
        return integer_bit_lengths([0])
    depths = [0] * len(p)
    heap = [(pi, label, [i]) for i, (label, pi) in enumerate(zip(p.outcomes, p.probs))]
    heapq.heapify(heap)
    while len(heap) > 1:
        w1, label1, members1 = heapq.heappop(heap)
        w2, label2, members2 = heapq.heappop(heap)
        for i in members1 + members2:
            depths[i] += 1
        heapq.heappush(heap, (w1 + w2, min(label1, label2), members1 + members2))
    return integer_bit_lengths(depths)
