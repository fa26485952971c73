"""Elias gamma code for positive integers over '0'/'1' strings"""

from typing import Tuple

from app.core.exceptions import DomainError


class GammaDecodeError(ValueError):
    """Raised when a bit string holds no well-formed gamma codeword at the given position."""


def gamma_length(n: int) -> int:
    """Number of bits in the gamma codeword of n: 2 floor(log2 n) + 1."""
    if n < 1:
        raise DomainError(f"gamma codes positive integers, got {n}")
    return 2 * (n.bit_length() - 1) + 1


def gamma_encode(n: int) -> str:
    """floor(log2 n) zeros followed by the binary digits of n."""
    if n < 1:
        raise DomainError(f"gamma codes positive integers, got {n}")
    digits = format(n, "b")
    return "0" * (len(digits) - 1) + digits


def gamma_decode(bits: str, pos: int = 0) -> Tuple[int, int]:
    """Decode one codeword starting at pos.

    Returns:
        (n, position just after the codeword)

    Raises:
        GammaDecodeError: if the string ends before the codeword does
    """
    zeros = 0
    while pos + zeros < len(bits) and bits[pos + zeros] == "0":
        zeros += 1
    start = pos + zeros
    end = start + zeros + 1
    if end > len(bits):
        raise GammaDecodeError(f"truncated gamma codeword at position {pos}")
    return int(bits[start:end], 2), end
