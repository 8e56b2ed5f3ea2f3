"""The ternary-structured binary sequence over {1,2} used by the circular
construction, with its two generators and factor utilities.

Indexing is 1-based in this module, matching the defining recurrence
(b_1 = 1, b_2 = 2, b_i = b_{i/3} when 3 | i); every other module is
0-based and the boundary stays behind this interface.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .words import Word, WordLike, as_word


@dataclass(frozen=True)
class BetaPrefix:
    length: int
    word: Word

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters


class _Cache:
    """Grow-on-demand prefix of the sequence, shared across calls."""

    def __init__(self) -> None:
        self._letters: list[int] = [0]  # 1-based; slot 0 unused
        self._twos: list[int] = []  # 1-based positions of the letter 2
        self._lock = threading.Lock()

    def ensure(self, n: int) -> None:
        with self._lock:
            have = len(self._letters) - 1
            if have >= n:
                return
            letters = self._letters
            twos = self._twos
            for i in range(have + 1, n + 1):
                r = i % 3
                if r == 1:
                    b = 1
                elif r == 2:
                    b = 2
                else:
                    b = letters[i // 3]
                letters.append(b)
                if b == 2:
                    twos.append(i)

    def prefix(self, n: int) -> tuple[int, ...]:
        self.ensure(n)
        return tuple(self._letters[1 : n + 1])

    def twos_upto(self, n: int) -> list[int]:
        self.ensure(n)
        import bisect

        cut = bisect.bisect_right(self._twos, n)
        return self._twos[:cut]

    def letter(self, i: int) -> int:
        self.ensure(i)
        return self._letters[i]

    def segment(self, start: int, length: int) -> tuple[int, ...]:
        """Letters b_start .. b_{start+length-1} (1-based)."""
        self.ensure(start + length - 1)
        return tuple(self._letters[start : start + length])


_CACHE = _Cache()


def beta_recurrence(k: int) -> tuple[int, ...]:
    """First k letters via the mod-3 recurrence."""
    if k < 0:
        raise ValueError("prefix length must be nonnegative")
    return _CACHE.prefix(k)


def beta_tau(k: int) -> tuple[int, ...]:
    """First k letters as the fixed point of 1 -> 121, 2 -> 122."""
    if k < 0:
        raise ValueError("prefix length must be nonnegative")
    word: list[int] = [1]
    while len(word) < k:
        word = [c for a in word for c in ((1, 2, 1) if a == 1 else (1, 2, 2))]
    return tuple(word[:k])


def beta_prefix(k: int) -> BetaPrefix:
    """First k letters, cross-checked between the two generators."""
    rec = beta_recurrence(k)
    tau = beta_tau(k)
    if rec != tau:
        raise AssertionError("sequence generators disagree; soundness bug")
    return BetaPrefix(k, Word(rec, 2))


def factor_bracketed_by_two(k: int) -> tuple[int, Word]:
    """Leftmost length-k factor that begins and ends in the letter 2.

    Returns the 1-based start position and the factor.  The search window of
    3k + 9 letters is an engineering bound; running out of it would be a
    soundness bug, not a caller error.
    """
    if k < 1:
        raise ValueError("factor length must be positive")
    limit = 3 * k + 9
    _CACHE.ensure(limit)
    if k == 1:
        twos = _CACHE.twos_upto(limit)
        if twos:
            return twos[0], Word((2,), 2)
    else:
        two_set = set(_CACHE.twos_upto(limit))
        for p in _CACHE.twos_upto(limit - k + 1):
            if p + k - 1 in two_set:
                return p, Word(_CACHE.segment(p, k), 2)
    raise AssertionError(
        f"no length-{k} factor bracketed by 2 within {limit} letters; soundness bug"
    )


def sigma(u: WordLike) -> Word:
    """Letterwise renaming 1 -> 1, 2 -> 3."""
    w = as_word(u, alphabet_size=2)
    out = []
    for a in w.letters:
        if a == 1:
            out.append(1)
        elif a == 2:
            out.append(3)
        else:
            raise ValueError(f"letter {a} outside {{1,2}}")
    return Word(tuple(out), 3)


def period_divisibility_violations(
    prefix_length: int, max_factor_length: int = 60, max_power: int = 3
) -> list[tuple[int, int, int]]:
    """Exhaustive check that factors of the prefix where a period q persists
    for 3^k extra letters force 3^k to divide q.

    Returns violations as (start, period, power) with 1-based starts; an
    empty list means the divisibility property holds on this range.
    """
    import numpy as np

    letters = np.array(beta_recurrence(prefix_length), dtype=np.int8)
    violations: list[tuple[int, int, int]] = []
    for q in range(1, max_factor_length):
        eq = letters[:-q] == letters[q:]
        if not eq.any():
            continue
        false_pos = np.flatnonzero(~eq)
        # run[i] = matched extension of period q starting at i
        starts = np.arange(len(eq))
        if len(false_pos):
            nxt = np.searchsorted(false_pos, starts)
            next_false = np.where(
                nxt < len(false_pos),
                false_pos[np.minimum(nxt, len(false_pos) - 1)],
                len(eq),
            )
        else:
            next_false = np.full(len(eq), len(eq))
        runs = np.minimum(next_false - starts, max_factor_length - q)
        for k in range(1, max_power + 1):
            if q % 3**k == 0:
                continue
            bad = np.flatnonzero(runs >= 3**k)
            if len(bad):
                violations.append((int(bad[0]) + 1, q, k))
    return violations
