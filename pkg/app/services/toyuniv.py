"""Prefix-free toy machine: decoding, exhaustive enumeration and algorithmic entropies

Programs are bit strings over the grammar

    LIT  00 gamma(n) b1..bn     outputs the n literal bits
    REP  01 gamma(k) P          outputs the output of P repeated k times
    CAT  10 P Q                 outputs the output of P followed by that of Q

and opcode 11 is rejected. Every program is self-delimiting, so the set of
valid programs is prefix-free and its Kraft sum is at most 1.
"""

import itertools
import math
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Tuple

from app.core.exceptions import BudgetError, DomainError
from app.core.logging import get_logger
from app.models.enumeration import EnumerationReport, OutputStats, output_order
from app.models.logkind import LogKind
from app.models.run_config import LN2, Figure1Row
from app.services.efflog import eff_log, eff_log_excess
from app.services.elias import GammaDecodeError, gamma_decode, gamma_encode, gamma_length
from app.services.entropy import series_terms

logger = get_logger("services.toyuniv")

OP_LIT = "00"
OP_REP = "01"
OP_CAT = "10"
# LIT of one bit: 2 opcode bits, gamma(1), the bit
MIN_PROGRAM_LEN = 4
DEFAULT_MAX_LEN = 24
DEFAULT_STEP_BUDGET = 10**8
# hard cap on enumeration length in bits
MAX_LEN_CAP = 32
FIGURE1_MAX_N = 64
# REP counts that would build a longer output are rejected
MAX_OUTPUT_LEN = 1 << 24


class _Reject(Exception):
    pass


def encode_lit(bits: str) -> str:
    if not bits:
        raise DomainError("LIT needs at least one bit")
    return OP_LIT + gamma_encode(len(bits)) + bits


def encode_rep(k: int, program: str) -> str:
    return OP_REP + gamma_encode(k) + program


def encode_cat(first: str, second: str) -> str:
    return OP_CAT + first + second


def _parse(bits: str, max_output: int) -> Tuple[str, int]:
    """Iterative descent; pending holds the REP counts and CAT halves still open."""
    pos = 0
    pending: List[List] = []
    while True:
        op = bits[pos:pos + 2]
        if len(op) < 2:
            raise _Reject("truncated opcode")
        if op not in (OP_LIT, OP_REP, OP_CAT):
            raise _Reject("reserved opcode")
        if op == OP_CAT:
            pending.append([OP_CAT, None])
            pos += 2
            continue
        try:
            count, pos = gamma_decode(bits, pos + 2)
        except GammaDecodeError as e:
            raise _Reject(str(e)) from e
        if op == OP_REP:
            pending.append([OP_REP, count])
            continue
        if pos + count > len(bits):
            raise _Reject("truncated literal")
        out, pos = bits[pos:pos + count], pos + count

        while pending:
            frame = pending[-1]
            if frame[0] == OP_REP:
                pending.pop()
                if len(out) * frame[1] > max_output:
                    raise _Reject("output exceeds the length bound")
                out *= frame[1]
            elif frame[1] is None:
                frame[1] = out
                break
            else:
                pending.pop()
                out = frame[1] + out
                if len(out) > max_output:
                    raise _Reject("output exceeds the length bound")
        else:
            return out, pos


def decode(bits: str, max_output: int = MAX_OUTPUT_LEN) -> Optional[str]:
    """Run a program; None means the machine rejects it.

    Any string is accepted as input. Programs whose output would exceed
    max_output bits are rejected before the output is built.
    """
    if not set(bits) <= {"0", "1"}:
        return None
    try:
        out, end = _parse(bits, max_output)
    except _Reject:
        return None
    if end != len(bits):
        return None
    return out


def _check_max_len(max_len: int, cap: Optional[int]) -> None:
    cap = MAX_LEN_CAP if cap is None else cap
    if not (1 <= max_len <= cap):
        raise DomainError(
            f"max_len must lie in [1, {cap}], got {max_len}",
            context={"max_len": max_len, "cap": cap},
        )


def enumerate_programs(
    max_len: int = DEFAULT_MAX_LEN,
    step_budget: int = DEFAULT_STEP_BUDGET,
    cap: Optional[int] = None,
) -> EnumerationReport:
    """Count every valid program of length <= max_len by output, built from the grammar.

    table[L] maps an output to the number of programs of length exactly L
    producing it. One step is one (output, count) combination.

    Raises:
        BudgetError: if more than step_budget steps would be needed
    """
    _check_max_len(max_len, cap)
    table: Dict[int, Dict[str, int]] = {}
    steps = 0

    def charge(n: int) -> None:
        nonlocal steps
        steps += n
        if steps > step_budget:
            raise BudgetError(
                f"enumeration to {max_len} bits exceeds the step budget of {step_budget}",
                context={"max_len": max_len, "steps": steps},
            )

    for length in range(1, max_len + 1):
        row: Dict[str, int] = defaultdict(int)
        for n in range(1, length):
            if 2 + gamma_length(n) + n == length:
                charge(2 ** n)
                for digits in itertools.product("01", repeat=n):
                    row["".join(digits)] += 1
        for k in itertools.count(1):
            body = length - 2 - gamma_length(k)
            if body < MIN_PROGRAM_LEN:
                break
            inner = table[body]
            charge(len(inner))
            for out, count in inner.items():
                row[out * k] += count
        for first_len in range(MIN_PROGRAM_LEN, length - 2 - MIN_PROGRAM_LEN + 1):
            first, second = table[first_len], table[length - 2 - first_len]
            charge(len(first) * len(second))
            for out1, count1 in first.items():
                for out2, count2 in second.items():
                    row[out1 + out2] += count1 * count2
        table[length] = dict(row)

    per_output: Dict[str, Dict[int, int]] = defaultdict(dict)
    length_totals: Dict[int, int] = {}
    for length, row in table.items():
        if row:
            length_totals[length] = sum(row.values())
        for out, count in row.items():
            per_output[out][length] = count

    stats = {
        out: OutputStats(
            omega=math.fsum(count * math.ldexp(1.0, -length) for length, count in counts.items()),
            shortest=min(counts),
            length_counts=counts,
        )
        for out, counts in sorted(per_output.items(), key=lambda item: output_order(item[0]))
    }
    report = EnumerationReport(
        max_len=max_len,
        per_output=stats,
        z_partial=math.fsum(count * math.ldexp(1.0, -length) for length, count in length_totals.items()),
        program_count=sum(length_totals.values()),
        length_totals=length_totals,
        steps=steps,
    )
    logger.debug(
        f"enumerated {report.program_count} programs, {len(stats)} outputs up to {max_len} bits in {steps} steps"
    )
    return report


def iter_programs(max_len: int, cap: Optional[int] = None) -> Iterator[Tuple[str, str]]:
    """Every valid program of length <= max_len with its output, generated from the grammar."""
    _check_max_len(max_len, cap)
    by_length: Dict[int, List[Tuple[str, str]]] = {}
    for length in range(1, max_len + 1):
        found: List[Tuple[str, str]] = []
        for n in range(1, length):
            if 2 + gamma_length(n) + n == length:
                for digits in itertools.product("01", repeat=n):
                    bits = "".join(digits)
                    found.append((encode_lit(bits), bits))
        for k in itertools.count(1):
            body = length - 2 - gamma_length(k)
            if body < MIN_PROGRAM_LEN:
                break
            found.extend((encode_rep(k, program), out * k) for program, out in by_length[body])
        for first_len in range(MIN_PROGRAM_LEN, length - 2 - MIN_PROGRAM_LEN + 1):
            for p1, out1 in by_length[first_len]:
                for p2, out2 in by_length[length - 2 - first_len]:
                    found.append((encode_cat(p1, p2), out1 + out2))
        by_length[length] = sorted(found)
        yield from by_length[length]


def brute_force_programs(max_len: int) -> Dict[str, str]:
    """Decode every bit string of length <= max_len; maps accepted programs to outputs."""
    accepted = {}
    for length in range(1, max_len + 1):
        for digits in itertools.product("01", repeat=length):
            bits = "".join(digits)
            out = decode(bits)
            if out is not None:
                accepted[bits] = out
    return accepted


def lit_bound(y: str) -> int:
    """Length of the LIT program for y; enumeration to this length makes k_complexity exact."""
    return 2 + gamma_length(len(y)) + len(y)


def k_complexity(report: EnumerationReport, y: str) -> Optional[int]:
    """Shortest program length for y in bits, or None if no program up to max_len outputs y."""
    stats = report.stats(y)
    return None if stats is None else stats.shortest


def _damping(beta: float, length: int) -> float:
    if beta == LN2:
        return math.ldexp(1.0, -length)
    return math.exp(-beta * length)


def _check_beta(beta: float) -> None:
    if math.isnan(beta) or beta <= 0.0:
        raise DomainError(f"beta must be positive, got {beta!r}")


def partition_partial(report: EnumerationReport, beta: float = LN2) -> float:
    """Truncated partition function: sum of e^(-beta |x|) over every enumerated program."""
    _check_beta(beta)
    return math.fsum(count * _damping(beta, length) for length, count in report.length_totals.items())


def prior_weight(report: EnumerationReport, y: str, beta: float = LN2, normalized: bool = False) -> float:
    """Sum of e^(-beta |x|) over programs producing y, optionally divided by the partition sum."""
    _check_beta(beta)
    stats = report.stats(y)
    if stats is None:
        return 0.0
    weight = math.fsum(count * _damping(beta, length) for length, count in stats.length_counts.items())
    if normalized:
        return weight / partition_partial(report, beta)
    return weight


def _weight_in_domain(report: EnumerationReport, y: str, beta: float, normalized: bool) -> float:
    weight = prior_weight(report, y, beta, normalized)
    if not (0.0 < weight <= 1.0):
        raise DomainError(
            f"no program up to {report.max_len} bits outputs {y!r}" if weight == 0.0
            else f"prior weight {weight!r} of {y!r} is outside (0, 1]",
            context={"y": y, "max_len": report.max_len},
        )
    return weight


def algorithmic_entropy(
    kind: LogKind,
    report: EnumerationReport,
    y: str,
    beta: float = LN2,
    normalized: bool = False,
) -> float:
    """-eff_log(kind, omega_beta(y)); the natural kind at beta = ln 2 is -ln m(y)."""
    return -eff_log(kind, _weight_in_domain(report, y, beta, normalized))


def algorithmic_entropy_series_literal(
    kind: LogKind,
    report: EnumerationReport,
    y: str,
    k_max: int = 30,
    beta: float = LN2,
) -> float:
    """-sum_{k<=k_max} s_k (ln omega)^k / k!; for the plus kind this tends to 1 - omega."""
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    weight = _weight_in_domain(report, y, beta, False)
    return -math.fsum(series_terms(kind, math.log(weight), k_max))


def relative_algorithmic_entropy(kind: LogKind, report: EnumerationReport, y: str, beta: float = LN2) -> float:
    """algorithmic_entropy plus eff_log(kind, Z_beta)."""
    return algorithmic_entropy(kind, report, y, beta) + eff_log(kind, partition_partial(report, beta))


def summary_row(report: EnumerationReport, y: str, beta: float = LN2) -> Dict[str, object]:
    """One report row: omega, shortest length and the three entropies in nats."""
    stats = report.stats(y)
    if stats is None:
        raise DomainError(f"no program up to {report.max_len} bits outputs {y!r}", context={"y": y})
    return {
        "y": y,
        "omega": stats.omega,
        "shortest_bits": stats.shortest,
        "k_nat": algorithmic_entropy(LogKind.NATURAL, report, y, beta),
        "k_plus": algorithmic_entropy(LogKind.PLUS, report, y, beta),
        "k_minus": algorithmic_entropy(LogKind.MINUS, report, y, beta),
    }


def figure1_row(n: int) -> Figure1Row:
    """Entropies of a data size of n bits, K(n) = n against K+-(n) = -eff_log(+-, 2^-n) / ln 2.

    The deviations are taken from the series tail so they stay exact where
    they fall far below one ulp of n.
    """
    if not (1 <= n <= FIGURE1_MAX_N):
        raise DomainError(f"n must lie in [1, {FIGURE1_MAX_N}], got {n}")
    x = math.ldexp(1.0, -n)
    excess_plus = eff_log_excess(LogKind.PLUS, x) / LN2
    excess_minus = eff_log_excess(LogKind.MINUS, x) / LN2
    return Figure1Row(
        n=n,
        k=float(n),
        k_plus=n - excess_plus,
        k_minus=n - excess_minus,
        rel_dev_plus=abs(excess_plus) / n,
        rel_dev_minus=abs(excess_minus) / n,
    )


def figure1_table(n_min: int = 1, n_max: int = FIGURE1_MAX_N) -> List[Figure1Row]:
    if n_min > n_max:
        raise DomainError(f"n_min {n_min} exceeds n_max {n_max}")
    return [figure1_row(n) for n in range(n_min, n_max + 1)]
