"""Brute-force oracles, written straight from the definitions.

Everything here works on plain letter tuples and deliberately avoids the
library's scanning machinery (prefix functions, fingerprint marks), so the
two sides stay independent.
"""

from fractions import Fraction
from itertools import product

import numpy as np


def naive_is_period(letters, p):
    return all(letters[i] == letters[i + p] for i in range(len(letters) - p))


def naive_min_period(letters):
    for p in range(1, len(letters) + 1):
        if naive_is_period(letters, p):
            return p
    raise AssertionError("unreachable: the length is always a period")


def naive_max_exponent(letters):
    """Max exponent over all factors: every factor, every period."""
    best = Fraction(0)
    L = len(letters)
    for i in range(L):
        for j in range(i + 1, L + 1):
            f = letters[i:j]
            e = Fraction(len(f), naive_min_period(f))
            if e > best:
                best = e
    return best


def naive_circular_max_exponent(letters):
    """Max exponent over factors of every conjugate, length capped at |w|."""
    doubled = letters + letters
    L = len(letters)
    best = Fraction(0)
    for i in range(L):
        for length in range(1, L + 1):
            f = doubled[i : i + length]
            e = Fraction(len(f), naive_min_period(f))
            if e > best:
                best = e
    return best


def naive_is_free(letters, r, strict=False, circular=False):
    top = naive_circular_max_exponent(letters) if circular else naive_max_exponent(letters)
    if not letters:
        return True
    return top <= r if strict else top < r


def perm_identity(n):
    return tuple(range(1, n + 1))


def perm_cycle(n, k):
    images = list(range(1, n + 1))
    for i in range(1, k):
        images[i - 1] = i + 1
    images[k - 1] = 1
    return tuple(images)


def perm_apply_word(n, letters):
    """Image of a binary word, composed in word order, by direct evaluation."""
    images = perm_identity(n)
    c0, c1 = perm_cycle(n, n - 1), perm_cycle(n, n)
    for b in letters:
        c = c1 if b else c0
        images = tuple(c[v - 1] for v in images)
    return images


def naive_gamma(n, letters):
    """Codeword by explicit prefix composition: the letter is the point the
    prefix image sends to 1."""
    out = []
    for i in range(1, len(letters) + 1):
        images = perm_apply_word(n, letters[:i])
        out.append(images.index(1) + 1)
    return tuple(out)


def naive_kernel_repetition_exists(n, letters, circular=False):
    """Order-n kernel repetitions, checked over all factors, all periods,
    and all windows."""
    seq = letters + letters if circular else letters
    cap = len(letters)
    for i in range(len(seq)):
        for length in range(1, min(cap, len(seq) - i) + 1):
            v = seq[i : i + length]
            for p in range(1, length + 1):
                if not naive_is_period(v, p):
                    continue
                if (n - 1) * length <= n * p - (n - 1) ** 2:
                    continue
                for x in range(length - p + 1):
                    if perm_apply_word(n, v[x : x + p]) == perm_identity(n):
                        return True
    return False


def naive_psi_kernel(m, letters):
    return all(letters.count(a) % 4 == 0 for a in range(1, m + 1))


def naive_psi_repetition_exists(n, m, letters, circular=False):
    """Count-kernel repetitions: all factors, all periods, all windows."""
    seq = letters + letters if circular else letters
    cap = len(letters)
    for i in range(len(seq)):
        for length in range(1, min(cap, len(seq) - i) + 1):
            v = seq[i : i + length]
            for q in range(1, length + 1):
                if not naive_is_period(v, q):
                    continue
                if (n - 1) * (length + 1) < n * q - 3:
                    continue
                for x in range(length - q + 1):
                    if naive_psi_kernel(m, v[x : x + q]):
                        return True
    return False


def all_words(n, length):
    return product(range(n), repeat=length)


def batched_min_periods(mat):
    """Minimal period of every row of a (words x length) letter matrix,
    evaluated straight from the definition with column compares."""
    count, L = mat.shape
    out = np.full(count, L, dtype=np.int32)
    unresolved = np.ones(count, dtype=bool)
    for p in range(1, L):
        valid = np.ones(count, dtype=bool)
        for k in range(L - p):
            valid &= mat[:, k] == mat[:, k + p]
        newly = unresolved & valid
        out[newly] = p
        unresolved &= ~newly
        if not unresolved.any():
            break
    return out


def batched_max_exponents(mat, circular=False):
    """Per row: the max factor exponent, returned as (length, period) arrays
    to compare by cross multiplication.

    For every factor window and every valid period the candidate exponent
    length/period is folded into the running best; the maximum over all
    valid pairs equals the maximum over minimal periods.  Rows are doubled
    and factors capped at the row length when circular.
    """
    count, L = mat.shape
    work = np.hstack([mat, mat]) if circular else mat
    best_len = np.ones(count, dtype=np.int64)
    best_per = np.ones(count, dtype=np.int64)
    for i in range(L):
        width = L if circular else L - i
        if width < 2:
            continue
        valid = np.ones((width, count), dtype=bool)  # valid[p-1]: period p holds so far
        for ell in range(2, width + 1):
            col = work[:, i + ell - 1]
            for p in range(1, ell):
                v = valid[p - 1]
                if not v.any():
                    continue
                v &= work[:, i + ell - 1 - p] == col
                better = v & (ell * best_per > best_len * p)
                if better.any():
                    best_len[better] = ell
                    best_per[better] = p
    return best_len, best_per


def batched_has_circular_square(mat):
    """Per row: does the circular word contain a factor of exponent >= 2?
    Equivalent to containing a square, checked with direct column compares
    on the doubled matrix."""
    count, L = mat.shape
    work = np.hstack([mat, mat])
    has = np.zeros(count, dtype=bool)
    for p in range(1, L // 2 + 1):
        for i in range(L):
            eq = np.ones(count, dtype=bool)
            for k in range(p):
                eq &= work[:, i + k] == work[:, i + k + p]
            has |= eq
    return has
