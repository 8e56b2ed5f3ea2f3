"""Parameter frame for the large-alphabet construction, the count-based
kernel criterion, kernel-repetition detection over the small alphabet, the
structured-position language, and the optional uniform-morphism pipeline.

The morphism into binary words is never materialized for kernel decisions:
membership in its kernel is equivalent to every letter count being
divisible by 4, so detection is pure counting.  When an image table is
supplied, a sampled cross-check evaluates the permutation images directly
to validate the table against that criterion.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Optional, Sequence, Union

from . import _repscan
from .pansiot import gamma, phi
from .words import Word, WordLike, as_word


@dataclass(frozen=True)
class CarpiParameters:
    """n >= 27 with m = floor((n-3)/6), ell = floor(n/2), M = 4^(m-2)."""

    n: int
    m: int
    ell: int
    M: int


def params(n: int) -> CarpiParameters:
    if n < 27:
        raise ValueError("parameters undefined below Carpi range (n >= 27)")
    m = (n - 3) // 6
    return CarpiParameters(n, m, n // 2, 4 ** (m - 2))


def _small_word(m: int, w: WordLike) -> Word:
    word = as_word(w, alphabet_size=m)
    for a in word.letters:
        if not 1 <= a <= m:
            raise ValueError(f"letter {a} outside the {m}-letter alphabet")
    return word


def in_psi_kernel(m: int, v: WordLike) -> bool:
    """Kernel criterion: every letter count divisible by 4."""
    word = _small_word(m, v)
    counts = [0] * (m + 1)
    for a in word.letters:
        counts[a] += 1
    return all(c % 4 == 0 for c in counts[1:])


@dataclass(frozen=True)
class PsiKernelWitness:
    """Periodic factor with a window of length equal to the period whose
    letter counts are all divisible by 4, long enough that
    (n-1)(length+1) >= n*period - 3.

    Indices refer to the scanned sequence; for circular scans that is the
    doubled representative.
    """

    start: int
    length: int
    period: int
    kernel_start: int


def psi_kernel_length_bound(n: int, q: int) -> int:
    """Smallest length with (n-1)(length+1) >= n*q - 3 (non-strict bound)."""
    return -((n * q - 3) // -(n - 1)) - 1


def _count_marks(m: int, letters: Sequence[int]) -> list[int]:
    """Prefix letter-count fingerprints mod 4; marks[x] == marks[y] iff all
    counts of letters[x:y] are divisible by 4.  Packed 2 bits per letter for
    small alphabets, interned otherwise."""
    if m <= 30:
        fp = 0
        marks = [0]
        for a in letters:
            shift = 2 * (a - 1)
            cur = (fp >> shift) & 3
            fp += (((cur + 1) & 3) - cur) << shift
            marks.append(fp)
        return marks
    counts = [0] * (m + 1)
    ids: dict[tuple[int, ...], int] = {}
    key = tuple(counts[1:])
    marks = [ids.setdefault(key, 0)]
    for a in letters:
        counts[a] = (counts[a] + 1) % 4
        key = tuple(counts[1:])
        marks.append(ids.setdefault(key, len(ids)))
    return marks


def find_psi_kernel_repetition(
    parameters: CarpiParameters, w: WordLike, circular: bool = False
) -> Optional[PsiKernelWitness]:
    """First kernel repetition in scan order (periods ascending, then window
    starts), or None.  All periods are scanned.  With circular=True the
    rotations of w are scanned with factor length capped at |w|."""
    word = _small_word(parameters.m, w)
    L = len(word.letters)
    if L == 0:
        return None
    letters = word.letters * 2 if circular else word.letters
    marks = _count_marks(parameters.m, letters)
    hit = _repscan.scan(
        letters, marks, L, lambda q: psi_kernel_length_bound(parameters.n, q)
    )
    if hit is None:
        return None
    return PsiKernelWitness(hit.start, hit.length, hit.period, hit.window_start)


def structured_letter(m: int, i: int) -> int:
    """Prescribed letter at a position divisible by 4: three plus the 4-adic
    valuation of the position, capped at m (position 0 takes m)."""
    if i == 0:
        return m
    val = 0
    while i % 4 == 0:
        i //= 4
        val += 1
    return min(3 + val, m)


def structured_violation(
    parameters: CarpiParameters, t: int, x: WordLike
) -> Optional[str]:
    """None when x has length M*t, the prescribed letter at every position
    divisible by 4, and letters from {1,2,3} elsewhere; otherwise a
    description of the first violation.  A wrong length is an error."""
    word = as_word(x, alphabet_size=parameters.m)
    expected_len = parameters.M * t
    if len(word.letters) != expected_len:
        raise ValueError(
            f"length {len(word.letters)} does not match M*t = {expected_len}"
        )
    for i, a in enumerate(word.letters):
        if i % 4 == 0:
            want = structured_letter(parameters.m, i)
            if a != want:
                return f"position {i} carries {a}, prescribed {want}"
        elif a not in (1, 2, 3):
            return f"position {i} carries {a}, expected a letter of {{1,2,3}}"
    return None


def lambda_membership(parameters: CarpiParameters, t: int, x: WordLike) -> bool:
    """Membership in the structured-position language of length M*t."""
    return structured_violation(parameters, t, x) is None


@dataclass(frozen=True)
class MorphismTable:
    """Uniform binary images, one per letter of the m-letter alphabet, each
    of width (n-1)(floor(n/2)+1).  The images live outside this library and
    arrive as external input."""

    n: int
    m: int
    images: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return (self.n - 1) * (self.n // 2 + 1)

    def content_hash(self) -> str:
        blob = f"{self.n} {self.m}\n" + "\n".join(
            "".join(map(str, row)) for row in self.images
        )
        return hashlib.sha256(blob.encode("ascii")).hexdigest()


def load_fn_table(source: Union[str, Path, IO[str]]) -> MorphismTable:
    """Validated table from a path or open file: first line "n m", then m
    lines, each the binary image of one letter as an unpadded 0/1 string."""
    if hasattr(source, "read"):
        return parse_fn_table(source.read())
    return parse_fn_table(Path(source).read_text())


def parse_fn_table(text: str) -> MorphismTable:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty morphism table")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise ValueError(f"malformed table header {lines[0]!r}; expected 'n m'")
    n, m = int(header[0]), int(header[1])
    if n < 9:
        raise ValueError(f"table alphabet size {n} below the defined range")
    if m != (n - 3) // 6:
        raise ValueError(f"header m = {m} inconsistent with n = {n}")
    rows = lines[1:]
    if len(rows) != m:
        raise ValueError(f"expected {m} image rows, found {len(rows)}")
    width = (n - 1) * (n // 2 + 1)
    images = []
    for a, row in enumerate(rows, start=1):
        if set(row) - {"0", "1"}:
            raise ValueError(f"image row {a} is not binary")
        if len(row) != width:
            raise ValueError(
                f"image row {a} has width {len(row)}, expected {width}"
            )
        images.append(tuple(int(c) for c in row))
    return MorphismTable(n, m, tuple(images))


def apply_table(table: MorphismTable, w: WordLike) -> Word:
    """Concatenated images of the letters of w (the uniform morphism)."""
    word = _small_word(table.m, w)
    out: list[int] = []
    for a in word.letters:
        out.extend(table.images[a - 1])
    return Word(tuple(out), 2)


def pipeline(
    parameters: CarpiParameters, table: MorphismTable, w: WordLike
) -> Word:
    """Codeword of the table image of w; output length is
    |w| * (n-1)(ell+1)."""
    if table.n != parameters.n or table.m != parameters.m:
        raise ValueError(
            f"table is for n={table.n}, m={table.m}; parameters have "
            f"n={parameters.n}, m={parameters.m}"
        )
    return gamma(parameters.n, apply_table(table, w))


def table_kernel_crosscheck(
    parameters: CarpiParameters,
    table: MorphismTable,
    w: Optional[WordLike] = None,
    max_samples: int = 40,
) -> Optional[str]:
    """Validate the table against the counting criterion: the permutation
    image of the image of v must be the identity exactly when every letter
    count of v is divisible by 4.

    Probes are deterministic: a^4 and (a b)^4 for each letter (count-kernel
    members, so their images must be the identity), plus short factors of w
    when given (typically not in the counting kernel, so their images must
    not be).  Returns None on agreement, else the first mismatch.
    """
    m = parameters.m
    probes: list[tuple[str, tuple[int, ...]]] = []
    for a in range(1, m + 1):
        probes.append((f"probe {a}^4", (a,) * 4))
    for a in range(1, m):
        probes.append((f"probe ({a}{a + 1})^4", (a, a + 1) * 4))
    if w is not None:
        word = _small_word(m, w)
        L = len(word.letters)
        for length in (1, 2, 3, 4, 8):
            if length > L:
                break
            for frac in (0, 3, 7):
                start = (L - length) * frac // 8
                label = f"factor at {start} length {length}"
                if all(lbl != label for lbl, _ in probes):
                    probes.append((label, word.letters[start : start + length]))
    for label, letters in probes[:max_samples]:
        v = Word(letters, m)
        by_counts = in_psi_kernel(m, v)
        by_perm = phi(parameters.n, apply_table(table, v)).is_identity()
        if by_counts != by_perm:
            return (
                f"{label}: counting criterion says {by_counts}, "
                f"permutation image says {by_perm}"
            )
    return None
