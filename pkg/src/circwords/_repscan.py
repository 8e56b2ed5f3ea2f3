"""Shared scan engine for kernel-repetition detectors.

A kernel repetition is a factor v with a period q and a length-q window v'
inside v whose mark predicate holds, subject to a length bound depending on
q.  Marks are prefix fingerprints chosen so that marks[x] == marks[x + q]
holds exactly when the window [x, x+q) satisfies the kernel predicate
(interned prefix permutations for the order-n kernel, packed letter counts
mod 4 for the count kernel).

Because a period-q factor turns all of its length-q windows into rotations
of one another (w[i+q] == w[i] moves the first letter of a window to the
end), kernel membership is shared by every window, so testing the windows
found through mark equality is complete.

Scan order is deterministic: periods ascending, then window start ascending;
the reported factor is the maximal period-q run around the first qualifying
window, capped at ``cap``.  Small inputs run a direct Python loop, large
ones a vectorized sweep with identical semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

_NUMPY_CUTOFF = 96


@dataclass(frozen=True)
class RepetitionHit:
    """Raw scan result; indices refer to the scanned (possibly doubled)
    letter sequence."""

    start: int
    length: int
    period: int
    window_start: int


def scan(
    letters: Sequence[int],
    marks: Sequence[int],
    cap: int,
    min_length: Callable[[int], int],
) -> RepetitionHit | None:
    """First (period, window) candidate whose maximal run meets min_length.

    ``marks`` has len(letters) + 1 entries.  ``cap`` bounds both the period
    and the reported factor length (the representative length for circular
    scans, the word length for linear ones).
    """
    n = len(letters)
    if n == 0 or cap < 1:
        return None
    if n <= _NUMPY_CUTOFF:
        return _scan_python(letters, marks, cap, min_length)
    return _scan_numpy(letters, marks, cap, min_length)


def _clip_run(x: int, q: int, left: int, right: int, cap: int) -> tuple[int, int]:
    """Factor (start, length) of the capped maximal run around window [x, x+q)."""
    a = x - left
    b = x + q + right
    if b - a <= cap:
        return a, b - a
    # keep the window covered while trimming to the cap
    return max(a, x + q - cap), cap


def _scan_python(letters, marks, cap, min_length):
    n = len(letters)
    for q in range(1, cap + 1):
        need = max(q, min_length(q))
        for x in range(n - q + 1):
            if marks[x] != marks[x + q]:
                continue
            left = 0
            while x - left > 0 and letters[x - left - 1] == letters[x - left - 1 + q]:
                left += 1
            right = 0
            while x + q + right < n and letters[x + right] == letters[x + q + right]:
                right += 1
            total = q + left + right
            if min(total, cap) >= need:
                start, length = _clip_run(x, q, left, right, cap)
                return RepetitionHit(start, length, q, x)
    return None


def _scan_numpy(letters, marks, cap, min_length):
    s = np.asarray(letters, dtype=np.int16)
    f = np.asarray(marks, dtype=np.int64)
    n = len(s)
    for q in range(1, cap + 1):
        hits = f[: n + 1 - q] == f[q:]
        if not hits.any():
            continue
        need = max(q, min_length(q))
        xs = np.flatnonzero(hits)
        eq = s[: n - q] == s[q:]
        false_pos = np.flatnonzero(~eq)
        n_eq = n - q
        for x in map(int, xs):
            idx = int(np.searchsorted(false_pos, x))
            nxt = int(false_pos[idx]) if idx < len(false_pos) else n_eq
            right = max(nxt - x, 0) if x < n_eq else 0
            prv = int(false_pos[idx - 1]) if idx > 0 else -1
            left = min(x - 1 - prv, x)
            if min(q + left + right, cap) >= need:
                start, length = _clip_run(x, q, left, right, cap)
                return RepetitionHit(start, length, q, x)
    return None
