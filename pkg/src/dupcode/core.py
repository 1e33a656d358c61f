"""Code parameters, symbol words, and fixed-width base-q digit blocks.

Words are tuples of small non-negative integers. All positions and offsets
in this package are 0-based; ranges are half-open. The command line layer
keeps the same numbering, and documents it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]

#: Largest supported alphabet. Keeps hashing arithmetic in 64-bit range.
MAX_ALPHABET = 256

_CHAR_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
_CHAR_VALUE = {c: v for v, c in enumerate(_CHAR_ALPHABET)}


class DupcodeError(Exception):
    """Base class for all errors raised by this package."""


class MalformedWordError(DupcodeError, ValueError):
    """An input word is invalid: bad text, out-of-range symbol, wrong length."""


class MalformedCodewordError(DupcodeError, ValueError):
    """A received word cannot be decoded or corrected under the code contract."""


class VerificationError(DupcodeError):
    """A verification pass found a violation it was asked to rule out."""


class GuardExceededError(DupcodeError):
    """An exhaustive enumeration would exceed the configured space guard."""


class InternalDefectError(DupcodeError):
    """An internal invariant was breached. Always a bug, never bad input."""


@dataclass(frozen=True)
class CodeParams:
    """Parameter bundle shared by every operation.

    q is the alphabet size and n the message length. L is the window
    length, the smallest integer with q**L >= n, and K = 4*L + 1 is the
    smallest duplication half-length the code is built to correct.
    Codewords have length n + 1 (redundancy is exactly one symbol).
    """

    q: int
    n: int
    L: int
    K: int

    @property
    def feasible(self) -> bool:
        """Whether a duplication of half-length >= K fits in n+1 symbols."""
        return self.n + 1 >= 2 * self.K


def derive_params(q: int, n: int) -> CodeParams:
    """Derive (L, K) from the alphabet size q and message length n.

    L is computed by integer arithmetic (no floating logs): the smallest
    L with q**L >= n.
    """
    if not isinstance(q, int) or not isinstance(n, int):
        raise ValueError("q and n must be integers")
    if q < 2:
        raise ValueError(f"alphabet size q must be >= 2, got {q}")
    if q > MAX_ALPHABET:
        raise ValueError(f"alphabet size q must be <= {MAX_ALPHABET}, got {q}")
    if n < 2:
        raise ValueError(f"message length n must be >= 2, got {n}")
    L = 1
    power = q
    while power < n:
        power *= q
        L += 1
    return CodeParams(q=q, n=n, L=L, K=4 * L + 1)


def check_word(symbols: Iterable[int], q: int) -> Word:
    """Validate symbols against the alphabet and return them as a Word."""
    word = tuple(int(s) for s in symbols)
    for pos, s in enumerate(word):
        if s < 0 or s >= q:
            raise MalformedWordError(
                f"symbol {s} at position {pos} is outside the alphabet [0, {q})"
            )
    return word


def parse_word(text: str, q: int) -> Word:
    """Parse the textual word format.

    For q <= 36 a word is a string over 0-9a-z, one character per symbol
    (uppercase accepted). For larger alphabets it is a comma-separated
    list of decimal integers.
    """
    text = text.strip()
    if text == "":
        raise MalformedWordError("empty word")
    if q <= 36:
        symbols = []
        for pos, ch in enumerate(text):
            v = _CHAR_VALUE.get(ch.lower())
            if v is None:
                raise MalformedWordError(f"invalid symbol character {ch!r} at position {pos}")
            symbols.append(v)
    else:
        try:
            symbols = [int(part.strip()) for part in text.split(",")]
        except ValueError as exc:
            raise MalformedWordError(f"invalid comma-separated word: {exc}") from None
    return check_word(symbols, q)


def format_word(word: Sequence[int], q: int) -> str:
    """Render a word in the textual format accepted by parse_word."""
    w = check_word(word, q)
    if q <= 36:
        return "".join(_CHAR_ALPHABET[s] for s in w)
    return ",".join(str(s) for s in w)


def to_digits(value: int, params: CodeParams) -> Word:
    """Write value as exactly L base-q digits, most significant first."""
    q, L = params.q, params.L
    if value < 0 or value >= q**L:
        raise ValueError(f"value {value} does not fit in {L} base-{q} digits")
    digits = [0] * L
    v = value
    for slot in range(L - 1, -1, -1):
        digits[slot] = v % q
        v //= q
    return tuple(digits)


def from_digits(digits: Sequence[int], params: CodeParams) -> int:
    """Read an L-digit base-q block, most significant digit first."""
    q, L = params.q, params.L
    if len(digits) != L:
        raise ValueError(f"expected exactly {L} digits, got {len(digits)}")
    value = 0
    for d in digits:
        if d < 0 or d >= q:
            raise ValueError(f"digit {d} outside [0, {q})")
        value = value * q + d
    return value
