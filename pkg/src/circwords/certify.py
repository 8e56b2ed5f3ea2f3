"""Re-validation of certificates from scratch, trusting nothing recorded.

Construction certificates: the word-level checks are recomputed and must
reproduce the recorded outcomes exactly.  Checks that depended on an
external morphism table cannot be re-run without it and downgrade the
verdict to trusted.

Search witnesses: the word is re-checked against the recorded parameters.
Search refutations: re-verified by exhaustive enumeration when the instance
is small enough, otherwise marked trusted with its parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from . import carpi, construction
from .certificates import (
    CONDITIONAL,
    FAIL,
    KIND_CONSTRUCTION,
    KIND_SEARCH_REFUTATION,
    KIND_SEARCH_WITNESS,
    PASS,
    Certificate,
    MalformedCertificate,
)
from .words import Word, circular_is_r_free, is_r_free, parse_ratio

VALID = "VALID"
INVALID = "INVALID"
TRUSTED = "TRUSTED"

DEFAULT_RECHECK_LENGTH = 12
DEFAULT_RECHECK_ALPHABET = 3

_TABLE_CHECKS = {
    "table-kernel-crosscheck",
    "final-word-emitted",
    "final-word-scan",
}


@dataclass(frozen=True)
class CertifyResult:
    verdict: str
    detail: str = ""


def certify(
    cert: Certificate,
    recheck_length: int = DEFAULT_RECHECK_LENGTH,
    recheck_alphabet: int = DEFAULT_RECHECK_ALPHABET,
) -> CertifyResult:
    if cert.kind == KIND_CONSTRUCTION:
        return _certify_construction(cert)
    if cert.kind == KIND_SEARCH_WITNESS:
        return _certify_witness(cert)
    if cert.kind == KIND_SEARCH_REFUTATION:
        return _certify_refutation(cert, recheck_length, recheck_alphabet)
    raise MalformedCertificate(f"unknown certificate kind {cert.kind!r}")


def _int_param(cert: Certificate, key: str) -> int:
    try:
        return int(cert.param(key))
    except (KeyError, ValueError):
        raise MalformedCertificate(f"missing or malformed parameter {key!r}") from None


def _certify_construction(cert: Certificate) -> CertifyResult:
    n = _int_param(cert, "n")
    t = _int_param(cert, "t")
    if cert.word is None:
        raise MalformedCertificate("construction certificate without a word")
    p = carpi.params(n)
    if (p.m, p.ell, p.M) != (
        _int_param(cert, "m"),
        _int_param(cert, "ell"),
        _int_param(cert, "M"),
    ):
        return CertifyResult(INVALID, "recorded parameters contradict n")
    if len(cert.word.letters) != p.M * t:
        return CertifyResult(
            INVALID, f"word length {len(cert.word.letters)} is not M*t = {p.M * t}"
        )
    for a in cert.word.letters:
        if not 1 <= a <= p.m:
            return CertifyResult(INVALID, f"letter {a} outside the {p.m}-letter alphabet")

    recomputed = {
        c.name: c.outcome for c in construction._construction_checks(p, t, cert.word)
    }
    recomputed["final-word-length"] = PASS
    final_len = p.M * (n - 1) * (p.ell + 1) * t

    trusted = False
    for check in cert.checks:
        if check.name in _TABLE_CHECKS:
            trusted = True  # cannot re-run without the table
            continue
        if check.name == "final-word-freeness":
            if check.outcome != CONDITIONAL:
                return CertifyResult(INVALID, "final-word-freeness must be conditional")
            continue
        if check.name == "final-word-length":
            if check.detail != str(final_len):
                return CertifyResult(
                    INVALID, f"final length should be {final_len}, recorded {check.detail}"
                )
            continue
        want = recomputed.get(check.name)
        if want is None:
            raise MalformedCertificate(f"unknown construction check {check.name!r}")
        if check.outcome != want:
            return CertifyResult(
                INVALID,
                f"check {check.name} recomputes to {want}, recorded {check.outcome}",
            )
    for name in ("structured-positions", "kernel-membership",
                 "circular-kernel-repetition-scan"):
        if all(c.name != name for c in cert.checks):
            raise MalformedCertificate(f"construction certificate missing {name}")
    if trusted:
        detail = "table-dependent checks not re-run"
        if cert.table_hash:
            detail += f" (table hash {cert.table_hash[:16]}...)"
        return CertifyResult(TRUSTED, detail)
    return CertifyResult(VALID)


def _search_params(cert: Certificate):
    n = _int_param(cert, "n")
    length = _int_param(cert, "length")
    try:
        threshold = parse_ratio(cert.param("threshold"))
        strict = {"true": True, "false": False}[cert.param("strict")]
        circular = {"true": True, "false": False}[cert.param("circular")]
    except (KeyError, ValueError):
        raise MalformedCertificate("missing or malformed search parameters") from None
    if threshold <= 1:
        raise MalformedCertificate("threshold must exceed 1")
    return n, threshold, strict, circular, length


def _certify_witness(cert: Certificate) -> CertifyResult:
    n, threshold, strict, circular, length = _search_params(cert)
    if cert.word is None:
        raise MalformedCertificate("witness certificate without a word")
    if len(cert.word.letters) != length:
        return CertifyResult(INVALID, "witness has the wrong length")
    if any(not 0 <= a < n for a in cert.word.letters):
        return CertifyResult(INVALID, "witness letter outside the alphabet")
    result = (
        circular_is_r_free(cert.word, threshold, strict)
        if circular
        else is_r_free(cert.word, threshold, strict)
    )
    if result.free:
        return CertifyResult(VALID)
    rep = result.witness
    return CertifyResult(
        INVALID,
        f"witness contains a factor of exponent {rep.exponent} "
        f"(start {rep.start}, period {rep.period})",
    )


def _certify_refutation(
    cert: Certificate, recheck_length: int, recheck_alphabet: int
) -> CertifyResult:
    n, threshold, strict, circular, length = _search_params(cert)
    if n > recheck_alphabet or length > recheck_length:
        return CertifyResult(
            TRUSTED,
            f"instance (n={n}, length={length}) beyond the exhaustive re-check "
            f"bound (n<={recheck_alphabet}, length<={recheck_length})",
        )
    free = _exhaustive_free_word(n, length, threshold, strict, circular)
    if free is None:
        return CertifyResult(VALID)
    return CertifyResult(INVALID, f"enumeration found the free word {free}")


def _exhaustive_free_word(
    n: int, length: int, threshold: Fraction, strict: bool, circular: bool
) -> Optional[Word]:
    """Generate-and-test over all n^length words; independent of the pruned
    search."""
    for letters in product(range(n), repeat=length):
        word = Word(letters, n)
        res = (
            circular_is_r_free(word, threshold, strict)
            if circular
            else is_r_free(word, threshold, strict)
        )
        if res.free:
            return word
    return None
