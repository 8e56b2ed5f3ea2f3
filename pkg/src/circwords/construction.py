"""Builder and verifier for kernel words of length M*t over the small
alphabet whose circular word carries no kernel repetitions.

The build interleaves three strands: positions divisible by 4 take the
prescribed structured letter, the remaining even positions take a short
{3,2,1} block word, and odd positions take u followed by its {1,3}-renaming,
where u is a factor of the ternary-structured sequence chosen to begin and
end in 2.  The verifier recomputes every property from the raw word and
never trusts the builder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .beta import factor_bracketed_by_two, sigma
from .carpi import (
    CarpiParameters,
    MorphismTable,
    find_psi_kernel_repetition,
    in_psi_kernel,
    params,
    pipeline,
    psi_kernel_length_bound,
    structured_letter,
    structured_violation,
    table_kernel_crosscheck,
)
from .certificates import (
    CONDITIONAL,
    FAIL,
    KIND_CONSTRUCTION,
    PASS,
    SKIPPED,
    Certificate,
    CheckRecord,
)
from .words import Word, circular_max_exponent, format_ratio

DEFAULT_SCAN_BUDGET = 4096


@dataclass(frozen=True)
class ConstructionTrace:
    """Everything the builder chose; the verifier recomputes, never trusts."""

    params: CarpiParameters
    t: int
    u: Word
    s: int
    v: Word
    w: Word


def build_w(n: int, t: int) -> ConstructionTrace:
    """Deterministic construction of the length-M*t kernel word.

    Requires n >= 45 (so the small alphabet has at least 7 letters); the
    range 27 <= n <= 44 is refused rather than guessed at.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if n < 45:
        raise ValueError("construction requires n >= 45 (alphabet of 7 or more)")
    p = params(n)
    total = p.M * t
    quarter = total // 4
    _, u = factor_bracketed_by_two(quarter)
    s = 4 - (u.count(2) % 4)
    v_letters = (3,) * s + (2,) * s + (1,) * (quarter - 2 * s)
    odd = u.letters + sigma(u).letters
    out = []
    for i in range(total):
        if i % 4 == 0:
            out.append(structured_letter(p.m, i))
        elif i % 2 == 1:
            out.append(odd[(i + 1) // 2 - 1])
        else:
            out.append(v_letters[(i + 2) // 4 - 1])
    w = Word(tuple(out), p.m)
    if structured_violation(p, t, w) is not None or not in_psi_kernel(p.m, w):
        raise AssertionError("constructed word violates its own posts; soundness bug")
    return ConstructionTrace(p, t, u, s, Word(v_letters, 3), w)


def _construction_checks(p: CarpiParameters, t: int, w: Word) -> list[CheckRecord]:
    """The three word-level checks, all run (no short-circuit) so a failing
    word still reports every outcome."""
    checks = []
    violation = structured_violation(p, t, w)
    checks.append(
        CheckRecord(
            "structured-positions",
            PASS if violation is None else FAIL,
            violation or "",
        )
    )
    kernel_ok = in_psi_kernel(p.m, w)
    checks.append(
        CheckRecord(
            "kernel-membership",
            PASS if kernel_ok else FAIL,
            "" if kernel_ok else "some letter count not divisible by 4",
        )
    )
    witness = find_psi_kernel_repetition(p, w, circular=True)
    if witness is None:
        checks.append(CheckRecord("circular-kernel-repetition-scan", PASS))
    else:
        checks.append(
            CheckRecord(
                "circular-kernel-repetition-scan",
                FAIL,
                f"witness start={witness.start} length={witness.length} "
                f"period={witness.period} kernel-window={witness.kernel_start}",
            )
        )
    return checks


def verify_construction(trace: ConstructionTrace) -> Certificate:
    """Recompute all claimed properties of trace.w from scratch.

    Malformed traces (wrong length, letters off the alphabet) raise; content
    failures produce a FAIL certificate with the offending witness embedded.
    """
    p, t, w = trace.params, trace.t, trace.w
    if len(w.letters) != p.M * t:
        raise ValueError(f"malformed trace: |w| = {len(w.letters)}, expected {p.M * t}")
    for a in w.letters:
        if not 1 <= a <= p.m:
            raise ValueError(f"malformed trace: letter {a} outside the alphabet")
    fields = (
        ("n", str(p.n)),
        ("t", str(t)),
        ("m", str(p.m)),
        ("ell", str(p.ell)),
        ("M", str(p.M)),
        ("length", str(p.M * t)),
    )
    return Certificate(
        KIND_CONSTRUCTION, fields, tuple(_construction_checks(p, t, w)), w
    )


def full_pipeline(
    n: int,
    t: int,
    table: Optional[MorphismTable] = None,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
) -> Certificate:
    """Build, verify, and extend the claim to the final large-alphabet word.

    Without a table the final-word claim is recorded as conditional (the
    image table is external input).  With a table the final word is emitted
    and, when its length fits the scan budget, scanned directly for factors
    of exponent above n/(n-1).
    """
    trace = build_w(n, t)
    p = trace.params
    checks = _construction_checks(p, t, trace.w)
    final_len = p.M * (n - 1) * (p.ell + 1) * t
    checks.append(CheckRecord("final-word-length", PASS, str(final_len)))
    table_hash = None
    if table is None:
        checks.append(
            CheckRecord(
                "final-word-freeness",
                CONDITIONAL,
                f"requires a morphism table; claimed threshold {n}/{n-1} strict",
            )
        )
    else:
        if table.n != p.n or table.m != p.m:
            raise ValueError(
                f"table is for n={table.n}, m={table.m}; requested n={n}"
            )
        table_hash = table.content_hash()
        mismatch = table_kernel_crosscheck(p, table, trace.w)
        checks.append(
            CheckRecord(
                "table-kernel-crosscheck",
                PASS if mismatch is None else FAIL,
                mismatch or "",
            )
        )
        final = pipeline(p, table, trace.w)
        emitted_ok = len(final.letters) == final_len
        checks.append(
            CheckRecord(
                "final-word-emitted",
                PASS if emitted_ok else FAIL,
                f"length {len(final.letters)}",
            )
        )
        if final_len <= scan_budget:
            report = circular_max_exponent(final)
            from fractions import Fraction

            free = report.exponent <= Fraction(n, n - 1)
            checks.append(
                CheckRecord(
                    "final-word-scan",
                    PASS if free else FAIL,
                    f"max-exponent {format_ratio(report.exponent)}",
                )
            )
        else:
            checks.append(
                CheckRecord(
                    "final-word-scan",
                    SKIPPED,
                    f"length {final_len} exceeds scan budget {scan_budget}",
                )
            )
    fields = (
        ("n", str(p.n)),
        ("t", str(t)),
        ("m", str(p.m)),
        ("ell", str(p.ell)),
        ("M", str(p.M)),
        ("length", str(p.M * t)),
        ("scan-budget", str(scan_budget)),
    )
    return Certificate(
        KIND_CONSTRUCTION, fields, tuple(checks), trace.w, table_hash
    )


__all__ = [
    "ConstructionTrace",
    "DEFAULT_SCAN_BUDGET",
    "build_w",
    "verify_construction",
    "full_pipeline",
    "psi_kernel_length_bound",
]
