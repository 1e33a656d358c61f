"""Tandem duplication channel: apply one duplication, chosen or random."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import CodeParams, Word, check_word
from .repeats import Duplication


@dataclass(frozen=True)
class ChannelSpec:
    """Seeded single-duplication channel configuration.

    l_min defaults to the code threshold K, l_max to the word length.
    The generator is Python's Mersenne Twister (random.Random), so a seed
    fully determines the draw sequence on every platform.
    """

    seed: int
    l_min: int | None = None
    l_max: int | None = None


def apply_duplication(w: Sequence[int], i: int, l: int) -> Word:
    """Repeat the l symbols starting at offset i, in place: uvw -> uvvw."""
    w = tuple(w)
    if l < 1:
        raise ValueError(f"duplication length must be >= 1, got {l}")
    if i < 0 or i + l > len(w):
        raise ValueError(
            f"duplication (i={i}, l={l}) does not fit in a word of length {len(w)}"
        )
    return w[: i + l] + w[i : i + l] + w[i + l :]


class DuplicationChannel:
    """Draws duplications with persistent generator state across calls."""

    def __init__(self, spec: ChannelSpec, params: CodeParams):
        self.spec = spec
        self.params = params
        self._rng = random.Random(spec.seed)

    def corrupt(self, w: Sequence[int]) -> tuple[Word, Duplication]:
        w = check_word(w, self.params.q)
        l_lo = self.spec.l_min if self.spec.l_min is not None else self.params.K
        l_hi = self.spec.l_max if self.spec.l_max is not None else len(w)
        l_hi = min(l_hi, len(w))
        if l_lo < 1 or l_lo > l_hi:
            raise ValueError(
                f"no admissible duplication length: need {l_lo} <= l <= {l_hi} "
                f"for a word of length {len(w)}"
            )
        l = self._rng.randint(l_lo, l_hi)
        i = self._rng.randint(0, len(w) - l)
        return apply_duplication(w, i, l), Duplication(i, l)


def random_duplication(
    w: Sequence[int], spec: ChannelSpec, params: CodeParams
) -> tuple[Word, Duplication]:
    """One-shot seeded corruption: a fresh generator per call, so the same
    spec and word always produce the same duplication."""
    return DuplicationChannel(spec, params).corrupt(w)
