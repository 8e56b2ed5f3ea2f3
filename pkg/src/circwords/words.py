"""Exact period, exponent, and repetition-freeness machinery for linear and
circular words.

All verdicts are computed with integer and rational arithmetic only; no
floating point enters any comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

WordLike = Union["Word", str, Sequence[int]]


@dataclass(frozen=True)
class Word:
    """Finite sequence of integer letters over an explicit alphabet size.

    Letters are non-negative and bounded by ``alphabet_size``, so the one
    carrier serves both 0-based alphabets (bits, search alphabets {0..n-1})
    and 1-based alphabets ({1..n}).
    """

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise ValueError("alphabet size must be positive")
        if self.letters and not (
            0 <= min(self.letters) and max(self.letters) <= self.alphabet_size
        ):
            bad = next(
                v for v in self.letters if not 0 <= v <= self.alphabet_size
            )
            raise ValueError(
                f"letter {bad} outside alphabet bound {self.alphabet_size}"
            )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def rotate(self, j: int) -> "Word":
        """Conjugate starting at position j."""
        if not self.letters:
            return self
        j %= len(self.letters)
        return Word(self.letters[j:] + self.letters[:j], self.alphabet_size)

    def count(self, letter: int) -> int:
        return self.letters.count(letter)


@dataclass(frozen=True)
class CircularWord:
    """Equivalence class of conjugates, stored as one representative.

    Factor queries are capped at the representative length.
    """

    representative: Word

    def __post_init__(self) -> None:
        if not self.representative.letters:
            raise ValueError("circular word needs a nonempty representative")

    def __len__(self) -> int:
        return len(self.representative)

    def doubled(self) -> tuple[int, ...]:
        return self.representative.letters * 2


@dataclass(frozen=True)
class ExponentReport:
    """A factor occurrence (start, length) together with a period of it and
    the exact exponent length/period."""

    start: int
    length: int
    period: int
    exponent: Fraction

    @classmethod
    def of(cls, start: int, length: int, period: int) -> "ExponentReport":
        return cls(start, length, period, Fraction(length, period))


@dataclass(frozen=True)
class FreenessResult:
    free: bool
    witness: Optional[ExponentReport] = None
    witness_word: Optional[Word] = None


def as_word(w: WordLike, alphabet_size: Optional[int] = None) -> Word:
    """Coerce strings (serialized form) and plain letter sequences to Word."""
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return parse_word(w, alphabet_size)
    letters = tuple(int(v) for v in w)
    if alphabet_size is None:
        alphabet_size = _infer_alphabet(letters)
    return Word(letters, alphabet_size)


def _infer_alphabet(letters: tuple[int, ...]) -> int:
    if not letters:
        return 1
    top = max(letters)
    # 0-based alphabets contain the letter 0; 1-based ones never do.
    return top + 1 if 0 in letters else max(top, 1)


def parse_word(text: str, alphabet_size: Optional[int] = None) -> Word:
    """Parse the serialized form: digit string for alphabets of size <= 9,
    dot-separated decimal letters (e.g. "7.1.2.1") for larger alphabets."""
    text = text.strip()
    if not text:
        return Word((), alphabet_size or 1)
    if "." in text:
        try:
            letters = tuple(int(part) for part in text.split("."))
        except ValueError:
            raise ValueError(f"malformed word {text!r}") from None
    else:
        if not text.isdigit():
            raise ValueError(f"malformed word {text!r}")
        letters = tuple(int(c) for c in text)
    if alphabet_size is None:
        alphabet_size = _infer_alphabet(letters)
    return Word(letters, alphabet_size)


def format_word(w: Word) -> str:
    if w.alphabet_size <= 9:
        return "".join(str(v) for v in w.letters)
    return ".".join(str(v) for v in w.letters)


def parse_ratio(text: str) -> Fraction:
    """Parse an exact rational given as "P/Q" (or a bare integer "P").

    Decimal notation is rejected: thresholds must be exact.
    """
    text = text.strip()
    if "/" in text:
        num_s, _, den_s = text.partition("/")
        try:
            num, den = int(num_s), int(den_s)
        except ValueError:
            raise ValueError(f"malformed rational {text!r}") from None
        if den < 1:
            raise ValueError(f"malformed rational {text!r}: denominator must be >= 1")
        return Fraction(num, den)
    try:
        return Fraction(int(text))
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None


def format_ratio(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def is_period(letters: Sequence[int], p: int) -> bool:
    """Direct test of the period definition: w[i+p] == w[i] for all valid i."""
    if p < 1:
        raise ValueError("periods are positive")
    return all(letters[i] == letters[i + p] for i in range(len(letters) - p))


def minimal_period(letters: Sequence[int]) -> int:
    """Minimal period via the prefix function (length minus longest border)."""
    n = len(letters)
    if n == 0:
        raise ValueError("empty word has no exponent")
    pi = _prefix_function(letters)
    return n - pi[n - 1]


def _prefix_function(letters: Sequence[int]) -> list[int]:
    n = len(letters)
    pi = [0] * n
    k = 0
    for q in range(1, n):
        c = letters[q]
        while k and letters[k] != c:
            k = pi[k - 1]
        if letters[k] == c:
            k += 1
        pi[q] = k
    return pi


def exponent_report(w: WordLike) -> ExponentReport:
    """Minimal period and exact exponent |w|/p of the whole word."""
    word = as_word(w)
    if not word.letters:
        raise ValueError("empty word has no exponent")
    p = minimal_period(word.letters)
    return ExponentReport.of(0, len(word.letters), p)


def _best_factor(letters: Sequence[int], n_starts: int, max_len: int):
    """Factor with the largest exponent among all factors starting in
    [0, n_starts) of length <= max_len.

    Ties: earliest start, then smallest period.  Returns (start, length,
    period); exponents compared by cross multiplication, no Fractions in the
    loop.
    """
    best_len, best_per, best_start = 1, 1, 0
    for i in range(n_starts):
        window = letters[i : i + max_len]
        m = len(window)
        pi = [0] * m
        k = 0
        for q in range(1, m):
            c = window[q]
            while k and window[k] != c:
                k = pi[k - 1]
            if window[k] == c:
                k += 1
            pi[q] = k
            p = q + 1 - k
            if (q + 1) * best_per > best_len * p:
                best_len, best_per, best_start = q + 1, p, i
    return best_start, best_len, best_per


def max_factor_exponent(w: WordLike) -> ExponentReport:
    """Maximal exponent over all nonempty factors of w."""
    word = as_word(w)
    if not word.letters:
        raise ValueError("empty word has no exponent")
    L = len(word.letters)
    start, length, period = _best_factor(word.letters, L, L)
    return ExponentReport.of(start, length, period)


def is_r_free(w: WordLike, r: Fraction, strict: bool = False) -> FreenessResult:
    """r-free check (no factor of exponent >= r); with strict=True the
    r+-free check (no factor of exponent > r).

    On failure the witness is the factor of maximal exponent, earliest start
    then smallest period as tie-break.
    """
    if r <= 1:
        raise ValueError("freeness threshold must exceed 1")
    word = as_word(w)
    if not word.letters:
        return FreenessResult(True)
    report = max_factor_exponent(word)
    free = report.exponent <= r if strict else report.exponent < r
    if free:
        return FreenessResult(True)
    witness = Word(
        word.letters[report.start : report.start + report.length],
        word.alphabet_size,
    )
    return FreenessResult(False, report, witness)


def circular_max_exponent(cw: Union[CircularWord, WordLike]) -> ExponentReport:
    """Maximal exponent over all factors of the circular word, factor length
    capped at the representative length.

    Scans the doubled representative; the witness start indexes the doubled
    word (reduce mod |w| for a circular position).
    """
    circ = cw if isinstance(cw, CircularWord) else CircularWord(as_word(cw))
    L = len(circ)
    doubled = circ.doubled()
    start, length, period = _best_factor(doubled, L, L)
    return ExponentReport.of(start, length, period)


def circular_is_r_free(
    cw: Union[CircularWord, WordLike], r: Fraction, strict: bool = False
) -> FreenessResult:
    """Circular analogue of is_r_free, same witness tie-breaks."""
    if r <= 1:
        raise ValueError("freeness threshold must exceed 1")
    circ = cw if isinstance(cw, CircularWord) else CircularWord(as_word(cw))
    report = circular_max_exponent(circ)
    free = report.exponent <= r if strict else report.exponent < r
    if free:
        return FreenessResult(True)
    doubled = circ.doubled()
    witness = Word(
        doubled[report.start : report.start + report.length],
        circ.representative.alphabet_size,
    )
    return FreenessResult(False, report, witness)


def conjugates(w: WordLike) -> list[Word]:
    """All distinct rotations, in rotation-offset order (first occurrence)."""
    word = as_word(w)
    seen = set()
    out = []
    for j in range(max(len(word.letters), 1)):
        rot = word.rotate(j)
        if rot.letters not in seen:
            seen.add(rot.letters)
            out.append(rot)
    return out


def circumnavigations(w: WordLike) -> Iterator[tuple[int, Word]]:
    """Words of the form a v a where a v is a conjugate of w, keyed by the
    rotation offset."""
    word = as_word(w)
    for j in range(len(word.letters)):
        rot = word.rotate(j)
        yield j, Word(rot.letters + (rot.letters[0],), word.alphabet_size)
