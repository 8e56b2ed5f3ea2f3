"""Permutation morphism on binary words, the Pansiot encoding, and the two
forbidden-factor detectors for codewords (short stabilizing factors and
kernel repetitions).

Conventions, pinned once and for all:

* Permutations act on points 1..n on the right: ``point^(pq)`` means apply p
  first, then q.  The image of the binary word uv is therefore the image of
  u composed with the image of v, in word order.
* The letter 0 maps to the cycle (1 2 ... n-1), the letter 1 to the cycle
  (1 2 ... n).
* The codeword letter at position i is the preimage of the point 1 under
  the image of the length-i prefix.  This is the single most error-prone
  convention here; the encode(3, "011") == "231" regression pins it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import _repscan
from .words import Word, WordLike, as_word


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}; images[i-1] is the image of the point i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("images are not a permutation of 1..n")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def cycle(cls, n: int, length: int) -> "Permutation":
        """The cycle (1 2 ... length) inside the symmetric group on 1..n."""
        if not 1 <= length <= n:
            raise ValueError("cycle length out of range")
        images = list(range(1, n + 1))
        for i in range(1, length):
            images[i - 1] = i + 1
        images[length - 1] = 1
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # word order: self first, then other
        o = other.images
        return Permutation(tuple(o[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def fixed_prefix(self) -> int:
        """Largest k such that every point of 1..k is fixed."""
        k = 0
        for i, v in enumerate(self.images):
            if v != i + 1:
                break
            k = i + 1
        return k

    def __str__(self) -> str:
        seen: set[int] = set()
        cycles = []
        for i in range(1, len(self.images) + 1):
            if i in seen or self.images[i - 1] == i:
                continue
            cyc = [i]
            j = self.images[i - 1]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(cycles) if cycles else "()"


@dataclass(frozen=True)
class StabilizingFactor:
    """A factor whose permutation image fixes 1..k, shorter than k(n-1)."""

    start: int
    length: int
    k: int


@dataclass(frozen=True)
class KernelRepetitionWitness:
    """Periodic factor with an identity-image window of window length equal
    to the period, long enough to beat the Dejean-style bound.

    Indices refer to the scanned sequence; for circular scans that is the
    doubled representative.
    """

    start: int
    length: int
    period: int
    kernel_start: int


def _as_binary(u: WordLike) -> Word:
    w = as_word(u, alphabet_size=2)
    for b in w.letters:
        if b not in (0, 1):
            raise ValueError("expected a binary word over {0,1}")
    return w


def phi(n: int, u: WordLike) -> Permutation:
    """Image of a binary word: 0 -> (1 2 ... n-1), 1 -> (1 2 ... n),
    composed in word order."""
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    w = _as_binary(u)
    c0 = Permutation.cycle(n, n - 1).images
    c1 = Permutation.cycle(n, n).images
    images = list(range(1, n + 1))
    for b in w.letters:
        c = c1 if b else c0
        for i, v in enumerate(images):
            images[i] = c[v - 1]
    return Permutation(tuple(images))


def gamma(n: int, u: WordLike) -> Word:
    """Pansiot code of a binary word: letter i is the preimage of the point
    1 under the image of the length-i prefix.

    Maintains the inverse permutation in a rotating buffer: composing with
    either generator cycle on the right only rotates the buffer (plus one
    swap for the letter 0), so each letter costs O(1).
    """
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    w = _as_binary(u)
    buf = list(range(1, n + 1))
    off = 0
    out = []
    for b in w.letters:
        off = (off - 1) % n
        if b == 0:
            last = (off + n - 1) % n
            buf[off], buf[last] = buf[last], buf[off]
        out.append(buf[off])
    return Word(tuple(out), n)


def find_short_stabilizing(
    n: int, u: WordLike
) -> Optional[StabilizingFactor]:
    """Nonempty factor v fixing the points 1..k with |v| < k(n-1) for some
    k in 1..n-1, or None.

    Scans starts ascending then lengths ascending and reports the largest
    stabilized k for the first hit.
    """
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    w = _as_binary(u)
    letters = w.letters
    L = len(letters)
    c0 = Permutation.cycle(n, n - 1)
    c1 = Permutation.cycle(n, n)
    for i in range(L):
        perm = Permutation.identity(n)
        for j in range(i, L):
            perm = perm * (c1 if letters[j] else c0)
            k = min(perm.fixed_prefix(), n - 1)
            length = j - i + 1
            if k >= 1 and length < k * (n - 1):
                return StabilizingFactor(i, length, k)
    return None


def _prefix_perm_marks(n: int, letters: Sequence[int]) -> list[int]:
    """Interned prefix-permutation ids: marks[x] == marks[y] iff the image
    of letters[x:y] is the identity."""
    c0 = Permutation.cycle(n, n - 1).images
    c1 = Permutation.cycle(n, n).images
    images = tuple(range(1, n + 1))
    ids: dict[tuple[int, ...], int] = {images: 0}
    marks = [0]
    for b in letters:
        c = c1 if b else c0
        images = tuple(c[v - 1] for v in images)
        marks.append(ids.setdefault(images, len(ids)))
    return marks


def kernel_length_bound(n: int, p: int) -> int:
    """Smallest factor length strictly exceeding n*p/(n-1) - (n-1)."""
    return (n * p - (n - 1) * (n - 1)) // (n - 1) + 1


def find_kernel_repetition(
    n: int, u: WordLike, circular: bool = False
) -> Optional[KernelRepetitionWitness]:
    """Factor v with period p, containing a length-p window of identity
    image, with |v| > n*p/(n-1) - (n-1); or None.

    All periods are scanned, not just minimal ones.  With circular=True the
    rotations of u are scanned with factor length capped at |u|.
    """
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    w = _as_binary(u)
    L = len(w.letters)
    if L == 0:
        return None
    letters = w.letters * 2 if circular else w.letters
    marks = _prefix_perm_marks(n, letters)
    hit = _repscan.scan(letters, marks, L, lambda p: kernel_length_bound(n, p))
    if hit is None:
        return None
    return KernelRepetitionWitness(hit.start, hit.length, hit.period, hit.window_start)


def rotation_rename(n: int, u: WordLike, j: int) -> tuple[Word, Permutation]:
    """Pansiot code of the j-th rotation of a kernel word, with the letter
    renaming that transports the unrotated code onto it.

    For u with identity image, the code of the rotation by j equals the
    rotation by j of the code of u, renamed letterwise through the image of
    the length-j prefix.  The identity is asserted before returning.
    """
    w = _as_binary(u)
    if not phi(n, w).is_identity():
        raise ValueError("rotation transport requires u in ker(phi)")
    if not w.letters:
        return gamma(n, w), Permutation.identity(n)
    j %= len(w.letters)
    rotated_code = gamma(n, w.rotate(j))
    renaming = phi(n, Word(w.letters[:j], 2))
    transported = Word(
        tuple(renaming.apply(a) for a in gamma(n, w).rotate(j).letters), n
    )
    if transported != rotated_code:
        raise AssertionError("rotation transport identity violated")
    return rotated_code, renaming
