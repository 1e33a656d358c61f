"""Encoder, decoder and receiver-side correction.

Encoding appends one redundancy symbol 0 to the message, then repeatedly
rewrites the word while it still contains a long duplication: the left
copy of the leftmost long square is deleted and a same-length data block
is appended at the end. A block records the square's offset i and
half-length l as fixed-width digit blocks, padded by filler chosen so
the block cannot complete a new long square:

    i_digits | r-1 absent L-words | 0^t | 1 absent L-word | l_digits | 1

with r = (l - 2L - 1) // L and t = (l - 1) % L, which makes the block
exactly l symbols long (r >= 2 whenever l >= K). The word length is
n + 1 after every iteration, and the unprocessed prefix shrinks by at
least K per iteration, so the loop runs at most (n + 1) / K times.

Decoding walks blocks right to left: a trailing 1 announces a block,
whose digits say which segment to re-duplicate; a trailing 0 says the
word is the plain message plus the redundancy symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    CodeParams,
    InternalDefectError,
    MalformedCodewordError,
    MalformedWordError,
    Word,
    check_word,
    from_digits,
    to_digits,
)
from .repeats import _SMALL_CUTOFF, Duplication, find_leftmost_long, is_dup_free
from .seqword import EditableWord
from .windows import WindowIndex


@dataclass(frozen=True)
class BlockRecord:
    """One encoder iteration, kept when tracing: the square handled, the
    block arithmetic, and each filler with the word it was chosen against."""

    i: int
    l: int
    r: int
    t: int
    fillers: tuple[Word, ...]
    filler_prefixes: tuple[Word, ...]
    word_after: Word


class _ArrayState:
    """Flat list word state; splices are C-level memmoves."""

    __slots__ = ("_w",)

    def __init__(self, symbols: Sequence[int]):
        self._w = list(symbols)

    def __len__(self) -> int:
        return len(self._w)

    def view(self) -> Sequence[int]:
        return self._w

    def delete_range(self, a: int, b: int) -> None:
        del self._w[a:b]

    def extend(self, seq: Sequence[int]) -> None:
        self._w.extend(seq)


class _TreeState:
    """EditableWord-backed state for differential testing of the encoder."""

    __slots__ = ("_t",)

    def __init__(self, symbols: Sequence[int]):
        self._t = EditableWord.from_word(symbols)

    def __len__(self) -> int:
        return len(self._t)

    def view(self) -> Sequence[int]:
        return self._t.to_word()

    def delete_range(self, a: int, b: int) -> None:
        self._t.delete_range(a, b)

    def extend(self, seq: Sequence[int]) -> None:
        self._t.insert(len(self._t), seq)

    def audit(self) -> None:
        self._t.audit()


def _pick_absent(index: WindowIndex, params: CodeParams) -> Word:
    if index.root_count >= params.q**params.L:
        raise InternalDefectError("no absent window available; encoder precondition broken")
    return index.find_absent()


def _encode(
    x: Sequence[int],
    params: CodeParams,
    backend: str,
    self_check: bool,
    trace: list[BlockRecord] | None,
) -> Word:
    q, n, L, K = params.q, params.n, params.L, params.K
    xw = check_word(x, q)
    if len(xw) != n:
        raise MalformedWordError(f"message must have length {n}, got {len(xw)}")

    start = list(xw) + [0]
    dup = find_leftmost_long(start, K)
    if dup is None:
        return tuple(start)

    if backend == "array":
        state: _ArrayState | _TreeState = _ArrayState(start)
    elif backend == "tree":
        state = _TreeState(start)
    else:
        raise ValueError(f"unknown encoder backend {backend!r}")
    index = WindowIndex.build(start, params)
    d_len = n + 1  # length of the not-yet-rewritten prefix
    max_iters = (n + 1) // K + 1

    def put(seq: Sequence[int]) -> None:
        index.apply_append(state.view(), seq)
        state.extend(seq)

    iters = 0
    while dup is not None:
        iters += 1
        if iters > max_iters:
            raise InternalDefectError("encoder exceeded its iteration bound")
        i, l = dup.i, dup.l
        if i + l > d_len:
            raise InternalDefectError("left copy of a long square reaches into written blocks")
        r = (l - 2 * L - 1) // L
        t = (l - 1) % L
        if r < 2 or 2 * L + r * L + t + 1 != l:
            raise InternalDefectError(f"block arithmetic failed for l={l}, L={L}")

        index.apply_delete(state.view(), i, i + l)
        state.delete_range(i, i + l)
        d_len -= l

        fillers: list[Word] = []
        prefixes: list[Word] = []

        def put_filler() -> None:
            word = _pick_absent(index, params)
            if trace is not None:
                prefixes.append(tuple(state.view()))
            fillers.append(word)
            put(word)

        put(to_digits(i, params))
        for _ in range(r - 1):
            put_filler()
        if t:
            put((0,) * t)
        put_filler()
        put(to_digits(l, params))
        put((1,))

        if len(state) != n + 1:
            raise InternalDefectError(f"length invariant broken: {len(state)} != {n + 1}")
        if self_check:
            index.audit(state.view())
            if isinstance(state, _TreeState):
                state.audit()
        if trace is not None:
            trace.append(
                BlockRecord(
                    i=i,
                    l=l,
                    r=r,
                    t=t,
                    fillers=tuple(fillers),
                    filler_prefixes=tuple(prefixes),
                    word_after=tuple(state.view()),
                )
            )
        dup = find_leftmost_long(state.view(), K)
    return tuple(state.view())


def encode(
    x: Sequence[int],
    params: CodeParams,
    *,
    backend: str = "array",
    self_check: bool = False,
) -> Word:
    """Encode an n-symbol message into a duplication-free (n+1)-codeword.

    self_check=True re-verifies the window index and tree invariants after
    every iteration (slow; meant for differential testing).
    """
    return _encode(x, params, backend=backend, self_check=self_check, trace=None)


def encode_with_trace(
    x: Sequence[int], params: CodeParams, *, backend: str = "array"
) -> tuple[Word, list[BlockRecord]]:
    """Encode with per-iteration records and self-checks enabled."""
    trace: list[BlockRecord] = []
    y = _encode(x, params, backend=backend, self_check=True, trace=trace)
    return y, trace


def decode(y: Sequence[int], params: CodeParams) -> Word:
    """Invert encode. Raises MalformedCodewordError when y cannot be a codeword.

    Blocks are consumed right to left on an EditableWord, so each of the
    s <= (n+1)/K reinsertions costs O(l + log n) rather than a full copy.
    """
    q, n, L, K = params.q, params.n, params.L, params.K
    yw = check_word(y, q)
    if len(yw) != n + 1:
        raise MalformedCodewordError(f"codeword must have length {n + 1}, got {len(yw)}")
    if yw[-1] == 0:
        return yw[:-1]

    tree = EditableWord.from_word(yw)
    for _ in range((n + 1) // K + 1):
        m = len(tree)
        flag = tree.get(m - 1)
        if flag == 0:
            tree.delete_range(m - 1, m)
            return tree.to_word()
        if flag != 1:
            raise MalformedCodewordError(f"trailing flag must be 0 or 1, got {flag}")
        if m - 1 < L:
            raise MalformedCodewordError("too few symbols for a length block")
        l = from_digits(tree.slice(m - 1 - L, m - 1), params)
        if l < K:
            raise MalformedCodewordError(f"block half-length {l} is below the threshold {K}")
        if l > m:
            raise MalformedCodewordError(f"block half-length {l} exceeds the word length {m}")
        i = from_digits(tree.slice(m - l, m - l + L), params)
        tree.delete_range(m - l, m)
        rem = m - l
        if i + l > rem:
            raise MalformedCodewordError(
                f"reinsertion (i={i}, l={l}) does not fit in {rem} symbols"
            )
        seg = tree.slice(i, i + l)
        tree.insert(i + l, seg)
    raise MalformedCodewordError("block structure does not terminate")


def _leftmost_period_square(w: Sequence[int], l: int) -> int | None:
    """Smallest p with w[p:p+l] == w[p+l:p+2l], or None."""
    m = len(w)
    if l < 1 or 2 * l > m:
        return None
    if m <= _SMALL_CUTOFF:
        w = list(w)
        for p in range(m - 2 * l + 1):
            if w[p : p + l] == w[p + l : p + 2 * l]:
                return p
        return None
    arr = np.asarray(w, dtype=np.int64)
    eq = arr[:-l] == arr[l:]
    c = np.concatenate(([0], np.cumsum(eq)))
    full = np.flatnonzero(c[l:] - c[:-l] == l)
    return int(full[0]) if len(full) else None


def correct_with_position(
    y: Sequence[int], params: CodeParams
) -> tuple[Word, Duplication | None]:
    """Undo a single tandem duplication applied to a codeword.

    A received word of length n+1 is returned unchanged (removal = None).
    Otherwise the excess length determines the duplication's half-length
    l, the leftmost square with that period is located and its left copy
    removed; every removable square yields the same word when the original
    was free of length-l duplications. The result is verified to contain
    no square of half-length >= K. Half-lengths below K are handled
    mechanically, but uniqueness of the result is only guaranteed in the
    l >= K regime the code is designed for.
    """
    q, n, K = params.q, params.n, params.K
    yw = check_word(y, q)
    m = len(yw)
    if m == n + 1:
        return yw, None
    if m < n + 1:
        raise MalformedCodewordError(
            f"received word of length {m} is shorter than a codeword ({n + 1})"
        )
    l = m - (n + 1)
    p = _leftmost_period_square(yw, l)
    if p is None:
        raise MalformedCodewordError(f"no duplication of half-length {l} found")
    res = yw[:p] + yw[p + l :]
    if not is_dup_free(res, K):
        raise MalformedCodewordError(
            "removing the duplication leaves a long square; "
            "input is not a single corruption of a codeword"
        )
    return res, Duplication(p, l)


def correct(y: Sequence[int], params: CodeParams) -> Word:
    """Like correct_with_position, returning only the repaired word."""
    return correct_with_position(y, params)[0]


def is_codeword(y: Sequence[int], params: CodeParams) -> bool:
    """True iff y decodes and re-encodes to itself. Never raises on bad input."""
    try:
        yw = check_word(y, params.q)
    except MalformedWordError:
        return False
    if len(yw) != params.n + 1:
        return False
    try:
        x = decode(yw, params)
    except (MalformedWordError, MalformedCodewordError):
        return False
    return encode(x, params) == yw
