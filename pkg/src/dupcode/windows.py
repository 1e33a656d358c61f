"""Counter trie over the length-L windows of a tracked word.

The trie is a complete q-ary tree of depth L. Each leaf counts how often
its L-word occurs as a window of the tracked word; each internal counter
is the sum of its children, so the root counter is the total number of
windows (len(word) - L + 1, or 0 for short words). Nodes are addressed
heap-style: root is 0 and child c of node v is v*q + 1 + c. Small tries
use a flat list, large ones a sparse dict with missing entries read as 0.
"""

from __future__ import annotations

from typing import Sequence

from .core import CodeParams, InternalDefectError, Word

#: Tries with at most this many leaves get dense list storage.
DENSE_LEAF_LIMIT = 1 << 22


class WindowIndex:
    def __init__(self, params: CodeParams):
        q, L = params.q, params.L
        self.params = params
        self._pow = [q**e for e in range(L + 1)]
        leaves = self._pow[L]
        self._first_leaf = (leaves - 1) // (q - 1)
        total_nodes = self._first_leaf + leaves
        self._dense = leaves <= DENSE_LEAF_LIMIT
        if self._dense:
            self._counts: list[int] | dict[int, int] = [0] * total_nodes
        else:
            self._counts = {}

    @classmethod
    def build(cls, word: Sequence[int], params: CodeParams) -> "WindowIndex":
        """Index every length-L window of word. O(len * L)."""
        ix = cls(params)
        L = params.L
        for s in range(len(word) - L + 1):
            ix.add_window(word[s : s + L])
        return ix

    # -- raw counter access -------------------------------------------------

    def _get(self, node: int) -> int:
        if self._dense:
            return self._counts[node]
        return self._counts.get(node, 0)

    def _bump(self, node: int, delta: int) -> None:
        if self._dense:
            self._counts[node] += delta
        else:
            v = self._counts.get(node, 0) + delta
            if v:
                self._counts[node] = v
            else:
                self._counts.pop(node, None)

    def _path(self, window: Sequence[int]) -> list[int]:
        q, L = self.params.q, self.params.L
        if len(window) != L:
            raise ValueError(f"window must have length {L}, got {len(window)}")
        nodes = [0]
        v = 0
        for c in window:
            c = int(c)
            if c < 0 or c >= q:
                raise ValueError(f"window symbol {c} outside [0, {q})")
            v = v * q + 1 + c
            nodes.append(v)
        return nodes

    # -- multiset updates ---------------------------------------------------

    @property
    def root_count(self) -> int:
        return self._get(0)

    def window_count(self, window: Sequence[int]) -> int:
        return self._get(self._path(window)[-1])

    def add_window(self, window: Sequence[int]) -> None:
        for node in self._path(window):
            self._bump(node, 1)

    def remove_window(self, window: Sequence[int]) -> None:
        path = self._path(window)
        if self._get(path[-1]) <= 0:
            raise ValueError(f"window {tuple(window)} has zero count, cannot remove")
        for node in path:
            self._bump(node, -1)

    # -- incremental edits mirroring word edits ------------------------------

    def apply_append(self, w_before: Sequence[int], suffix: Sequence[int]) -> None:
        """Account for suffix being appended to the tracked word w_before."""
        L = self.params.L
        m = len(w_before)
        if not suffix:
            return
        base = max(0, m - L + 1)
        tail = list(w_before[base:]) + [int(s) for s in suffix]
        for s in range(base, m + len(suffix) - L + 1):
            j = s - base
            self.add_window(tail[j : j + L])

    def apply_delete(self, w_before: Sequence[int], a: int, b: int) -> None:
        """Account for positions [a, b) being cut out of w_before."""
        L = self.params.L
        m = len(w_before)
        if not (0 <= a <= b <= m):
            raise ValueError(f"range [{a}, {b}) invalid for word of length {m}")
        if a == b:
            return
        for s in range(max(0, a - L + 1), min(b - 1, m - L) + 1):
            self.remove_window(w_before[s : s + L])
        # Windows spanning the new junction at position a.
        base = max(0, a - L + 1)
        joint = list(w_before[base:a]) + list(w_before[b : b + L - 1])
        after_len = m - (b - a)
        for s in range(base, min(a - 1, after_len - L) + 1):
            j = s - base
            self.add_window(joint[j : j + L])

    # -- absent-window search -------------------------------------------------

    def find_absent(self) -> Word:
        """Lexicographic descent to some L-word with count zero.

        At depth m the search enters the smallest-digit child whose counter
        is below q**(L-m-1); such a child always exists while the root
        counter stays below q**L, and the leaf it reaches counts zero.
        """
        q, L = self.params.q, self.params.L
        if self.root_count >= self._pow[L]:
            raise ValueError("index holds q**L windows or more; every L-word occurs")
        v = 0
        digits = []
        for depth in range(L):
            threshold = self._pow[L - depth - 1]
            for c in range(q):
                child = v * q + 1 + c
                if self._get(child) < threshold:
                    v = child
                    digits.append(c)
                    break
            else:
                raise InternalDefectError("absent-window descent found no viable child")
        return tuple(digits)

    # -- integrity ------------------------------------------------------------

    def audit(self, word: Sequence[int]) -> None:
        """Check counters against a fresh index of word. Raises ValueError."""
        fresh = WindowIndex.build(word, self.params)
        if self._dense and fresh._dense:
            if self._counts != fresh._counts:
                for node, (mine, theirs) in enumerate(zip(self._counts, fresh._counts)):
                    if mine != theirs:
                        raise ValueError(f"node {node}: stored {mine}, rebuilt {theirs}")
        else:
            mine_d = self._as_dict()
            fresh_d = fresh._as_dict()
            if mine_d != fresh_d:
                raise ValueError("sparse counters disagree with a rebuilt index")
        q = self.params.q
        if self._dense:
            internal = range(self._first_leaf)
        else:
            internal = [node for node in self._as_dict() if node < self._first_leaf]
        for node in internal:
            total = sum(self._get(node * q + 1 + c) for c in range(q))
            if self._get(node) != total:
                raise ValueError(f"node {node}: counter {self._get(node)} != child sum {total}")

    def _as_dict(self) -> dict[int, int]:
        if self._dense:
            return {node: c for node, c in enumerate(self._counts) if c}
        return dict(self._counts)
