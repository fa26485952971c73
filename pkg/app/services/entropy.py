"""Generalized entropies H+/H-, Shannon entropy and the generalized relative entropy"""

import math
from typing import List

from app.core.exceptions import DomainError, SupportError
from app.core.logging import get_logger
from app.models.distribution import Distribution
from app.models.logkind import LogKind
from app.models.run_config import PerturbationGap
from app.services.efflog import DEFAULT_K_MAX, eff_log

logger = get_logger("services.entropy")


def _check_k_max(k_max: int) -> None:
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")


def _check_pair(p: Distribution, q: Distribution) -> None:
    if not p.same_outcomes(q):
        raise SupportError(
            "distributions must share the same outcome list",
            context={"p": list(p.outcomes), "q": list(q.outcomes)},
        )


def _check_support(p: Distribution, q: Distribution) -> None:
    _check_pair(p, q)
    for label, pi, qi in zip(p.outcomes, p.probs, q.probs):
        if pi > 0.0 and qi == 0.0:
            raise SupportError(
                f"p({label}) = {pi} > 0 but q({label}) = 0",
                context={"outcome": label},
            )


def series_terms(kind: LogKind, v: float, k_max: int) -> List[float]:
    """The terms s_k v^k / k! for k = 1..k_max."""
    terms = []
    term = v
    for k in range(1, k_max + 1):
        sign = kind.series_sign(k)
        if sign:
            terms.append(sign * term)
        term *= v / (k + 1)
    return terms


def series_closed(kind: LogKind, v: float) -> float:
    """The k -> infinity limit of sum_k s_k v^k / k!."""
    if kind is LogKind.NATURAL:
        return v
    if kind is LogKind.PLUS:
        return math.expm1(v)
    return -math.expm1(-v)


def entropy(kind: LogKind, p: Distribution) -> float:
    """-sum p(x) eff_log(kind, p(x)); zero-probability outcomes contribute 0."""
    return math.fsum(-pi * eff_log(kind, pi) for pi in p.probs if pi > 0.0)


def entropy_series(kind: LogKind, p: Distribution, k_max: int = DEFAULT_K_MAX) -> float:
    """-sum_x sum_{k<=k_max} s_k [p ln p]^k / k!."""
    _check_k_max(k_max)
    terms = []
    for pi in p.probs:
        if pi > 0.0:
            terms.extend(series_terms(kind, pi * math.log(pi), k_max))
    return -math.fsum(terms)


def shannon_tail_bound(p: Distribution) -> float:
    """sum_x (e^|p ln p| - 1 - |p ln p|), the bound on |H+- - H|."""
    terms = []
    for pi in p.probs:
        if pi > 0.0:
            u = abs(pi * math.log(pi))
            terms.append(math.expm1(u) - u)
    return math.fsum(terms)


def rel_entropy(kind: LogKind, p: Distribution, q: Distribution) -> float:
    """-sum p eff_log(p) + sum p eff_log(q), with the sign as written for the generalized divergence.

    For the natural family this is -KL(p||q).
    """
    _check_support(p, q)
    terms = []
    for pi, qi in zip(p.probs, q.probs):
        if pi > 0.0:
            terms.append(-pi * eff_log(kind, pi))
            terms.append(pi * eff_log(kind, qi))
    return math.fsum(terms)


def kl_divergence(p: Distribution, q: Distribution) -> float:
    """Conventional Kullback-Leibler divergence sum p ln(p/q) in nats."""
    _check_support(p, q)
    return math.fsum(pi * (math.log(pi) - math.log(qi)) for pi, qi in zip(p.probs, q.probs) if pi > 0.0)


def rel_entropy_series(kind: LogKind, p: Distribution, q: Distribution, k_max: int = DEFAULT_K_MAX) -> float:
    """Literal series form: -sum_x sum_k s_k [p ln p]^k/k! + sum_x sum_k s_k [p ln q]^k/k!."""
    _check_k_max(k_max)
    _check_support(p, q)
    terms = []
    for pi, qi in zip(p.probs, q.probs):
        if pi > 0.0:
            terms.extend(-t for t in series_terms(kind, pi * math.log(pi), k_max))
            terms.extend(series_terms(kind, pi * math.log(qi), k_max))
    return math.fsum(terms)


def rel_entropy_series_closed(kind: LogKind, p: Distribution, q: Distribution) -> float:
    """rel_entropy_series with every inner series replaced by its closed-form limit."""
    _check_support(p, q)
    terms = []
    for pi, qi in zip(p.probs, q.probs):
        if pi > 0.0:
            terms.append(-series_closed(kind, pi * math.log(pi)))
            terms.append(series_closed(kind, pi * math.log(qi)))
    return math.fsum(terms)


def perturbation_gap(kind: LogKind, p: Distribution, p_prime: Distribution) -> PerturbationGap:
    """|H(p) - H(p')| together with the l1 distance between p and p'."""
    _check_pair(p, p_prime)
    gap = abs(entropy(kind, p) - entropy(kind, p_prime))
    l1 = math.fsum(abs(a - b) for a, b in zip(p.probs, p_prime.probs))
    logger.debug(f"perturbation gap {kind.value}: entropy {gap!r}, l1 {l1!r}")
    return PerturbationGap(entropy_gap=gap, l1_distance=l1)
