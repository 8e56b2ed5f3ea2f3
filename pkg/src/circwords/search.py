"""Pruned backtracking search for r-free and r+-free words, linear or
circular, over small alphabets.

Pruning is twofold: an incremental check of every factor ending at the
freshly placed letter, and canonical-form symmetry reduction (letters must
make their first appearances in increasing order, dividing the tree by n!).
Circular searches defer wraparound factors to a full rotation-capped scan of
each completed word.

Results are deterministic for a given configuration regardless of worker
count: the tree is split into shards at a fixed prefix depth, each shard
gets a fixed slice of the node budget, and shard results are merged in
lexicographic order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .certificates import (
    KIND_SEARCH_REFUTATION,
    KIND_SEARCH_WITNESS,
    PASS,
    Certificate,
    CheckRecord,
)
from .words import (
    Word,
    circular_is_r_free,
    format_ratio,
    is_r_free,
)

WORKERS_ENV = "CIRCWORDS_WORKERS"
_SHARD_DEPTH = 4

STATUS_WITNESS = "witness"
STATUS_REFUTED = "refuted"
STATUS_EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchConfig:
    alphabet_size: int
    threshold: Fraction
    strict: bool = False
    circular: bool = False
    length: Optional[int] = None
    length_range: Optional[tuple[int, int]] = None
    workers: Optional[int] = None
    node_budget: Optional[int] = None

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise ValueError("alphabet size must be positive")
        if self.threshold <= 1:
            raise ValueError("freeness threshold must exceed 1")
        if (self.length is None) == (self.length_range is None):
            raise ValueError("exactly one of length and length_range is required")
        if self.length is not None and self.length < 1:
            raise ValueError("lengths are positive")
        if self.length_range is not None:
            lo, hi = self.length_range
            if lo < 1 or hi < lo:
                raise ValueError("malformed length range")

    def effective_workers(self) -> int:
        if self.workers is not None:
            return max(1, self.workers)
        env = os.environ.get(WORKERS_ENV, "")
        return max(1, int(env)) if env.isdigit() and env != "0" else 1


@dataclass(frozen=True)
class SearchResult:
    status: str
    length: int
    witness: Optional[Word] = None
    certificate: Optional[Certificate] = None
    nodes: int = 0


def _suffix_violates(word: list[int], num: int, den: int, strict: bool) -> bool:
    """Does some factor ending at the last position reach the threshold?

    For each period p the maximal periodic suffix is extended leftwards; its
    exponent bounds the exponent of every factor ending here with that
    period, so the check is sound and complete for the new position.
    """
    i = len(word) - 1
    for p in range(1, i + 2):
        run = 0
        j = i
        while j - p >= 0 and word[j] == word[j - p]:
            run += 1
            j -= 1
        length = p + run
        lhs = length * den
        rhs = num * p
        if lhs > rhs or (not strict and lhs == rhs):
            return True
    return False


class _Shard:
    """Depth-first search below one fixed canonical prefix."""

    def __init__(self, config: SearchConfig, length: int, prefix: tuple[int, ...],
                 node_cap: Optional[int]):
        self.config = config
        self.length = length
        self.prefix = prefix
        self.node_cap = node_cap
        self.nodes = 0
        self.truncated = False

    def run(self) -> tuple[str, Optional[tuple[int, ...]]]:
        word = list(self.prefix)
        found = self._extend(word, max(word, default=-1))
        if found is not None:
            return STATUS_WITNESS, found
        if self.truncated:
            return STATUS_EXHAUSTED, None
        return STATUS_REFUTED, None

    def _accept(self, word: list[int]) -> bool:
        cfg = self.config
        if not cfg.circular:
            return True
        candidate = Word(tuple(word), cfg.alphabet_size)
        return circular_is_r_free(candidate, cfg.threshold, cfg.strict).free

    def _extend(self, word: list[int], max_used: int) -> Optional[tuple[int, ...]]:
        cfg = self.config
        if len(word) == self.length:
            return tuple(word) if self._accept(word) else None
        top = min(max_used + 1, cfg.alphabet_size - 1)
        num, den = cfg.threshold.numerator, cfg.threshold.denominator
        for letter in range(top + 1):
            word.append(letter)
            if not _suffix_violates(word, num, den, cfg.strict):
                if self.node_cap is not None and self.nodes >= self.node_cap:
                    # a feasible extension exists but may not be explored
                    self.truncated = True
                    word.pop()
                    return None
                self.nodes += 1
                found = self._extend(word, max(max_used, letter))
                if found is not None:
                    word.pop()
                    return found
                if self.truncated:
                    word.pop()
                    return None
            word.pop()
        return None


def _enumerate_prefixes(
    config: SearchConfig, length: int, depth: int
) -> tuple[list[tuple[int, ...]], int]:
    """Feasible canonical prefixes at the shard depth, in lexicographic
    order, plus the node count spent enumerating them."""
    prefixes: list[tuple[int, ...]] = []
    nodes = 0
    num, den = config.threshold.numerator, config.threshold.denominator

    def rec(word: list[int], max_used: int) -> None:
        nonlocal nodes
        if len(word) == depth:
            prefixes.append(tuple(word))
            return
        top = min(max_used + 1, config.alphabet_size - 1)
        for letter in range(top + 1):
            word.append(letter)
            if not _suffix_violates(word, num, den, config.strict):
                nodes += 1
                rec(word, max(max_used, letter))
            word.pop()

    rec([], -1)
    return prefixes, nodes


def _witness_certificate(config: SearchConfig, length: int, witness: Word) -> Certificate:
    check = (
        circular_is_r_free(witness, config.threshold, config.strict)
        if config.circular
        else is_r_free(witness, config.threshold, config.strict)
    )
    if not check.free:
        raise AssertionError("search produced an unfree witness; soundness bug")
    return Certificate(
        KIND_SEARCH_WITNESS,
        _cert_params(config, length),
        (CheckRecord("freeness", PASS, "verified independently"),),
        witness,
    )


def _refutation_certificate(
    config: SearchConfig, length: int, nodes: int
) -> Certificate:
    return Certificate(
        KIND_SEARCH_REFUTATION,
        _cert_params(config, length),
        (CheckRecord("tree-exhausted", PASS, f"nodes {nodes}"),),
    )


def _cert_params(config: SearchConfig, length: int) -> tuple[tuple[str, str], ...]:
    return (
        ("n", str(config.alphabet_size)),
        ("threshold", format_ratio(config.threshold)),
        ("strict", "true" if config.strict else "false"),
        ("circular", "true" if config.circular else "false"),
        ("length", str(length)),
    )


def search_witness(config: SearchConfig, length: Optional[int] = None) -> SearchResult:
    """Lexicographically least witness of the configured length, or a
    refutation once the pruned tree is exhausted, or budget-exhausted.

    Identical configurations give identical results at any worker count.
    """
    if length is None:
        if config.length is None:
            raise ValueError("a single search needs a length")
        length = config.length

    depth = _SHARD_DEPTH if length > _SHARD_DEPTH else length
    prefixes, spent = _enumerate_prefixes(config, length, depth)
    budget = config.node_budget
    if budget is not None and spent > budget:
        return SearchResult(STATUS_EXHAUSTED, length, nodes=spent)

    if length == depth:
        # prefix enumeration already visited every full-length word
        results = [
            (STATUS_WITNESS, p) if _full_word_ok(config, p) else (STATUS_REFUTED, None)
            for p in prefixes
        ]
        total = spent
    else:
        remaining = None if budget is None else budget - spent
        caps = _split_budget(remaining, len(prefixes))
        shards = [
            _Shard(config, length, p, cap) for p, cap in zip(prefixes, caps)
        ]
        pool_size = min(config.effective_workers(), max(len(shards), 1))
        if pool_size > 1 and len(shards) > 1:
            with ThreadPoolExecutor(max_workers=pool_size) as pool:
                results = list(pool.map(lambda s: s.run(), shards))
        else:
            results = [s.run() for s in shards]
        total = spent + sum(s.nodes for s in shards)

    for (status, witness_letters) in results:
        if status == STATUS_EXHAUSTED:
            return SearchResult(STATUS_EXHAUSTED, length, nodes=total)
        if status == STATUS_WITNESS:
            witness = Word(witness_letters, config.alphabet_size)
            cert = _witness_certificate(config, length, witness)
            return SearchResult(STATUS_WITNESS, length, witness, cert, total)
    return SearchResult(
        STATUS_REFUTED, length, None, _refutation_certificate(config, length, total), total
    )


def _full_word_ok(config: SearchConfig, letters: tuple[int, ...]) -> bool:
    word = Word(letters, config.alphabet_size)
    if config.circular:
        return circular_is_r_free(word, config.threshold, config.strict).free
    return is_r_free(word, config.threshold, config.strict).free


def _split_budget(budget: Optional[int], shard_count: int) -> list[Optional[int]]:
    if budget is None:
        return [None] * shard_count
    if shard_count == 0:
        return []
    base, extra = divmod(max(budget, 0), shard_count)
    return [base + (1 if i < extra else 0) for i in range(shard_count)]


def search_all_lengths(config: SearchConfig) -> list[SearchResult]:
    """One result per length in the configured range, worker-independent.

    For linear searches the SAT set must be downward closed (prefixes of a
    free word are free); that is asserted on the finished table.
    """
    if config.length_range is None:
        raise ValueError("search_all_lengths needs a length range")
    lo, hi = config.length_range
    results = [search_witness(config, length) for length in range(lo, hi + 1)]
    if not config.circular:
        seen_unsat = False
        for res in results:
            if res.status == STATUS_REFUTED:
                seen_unsat = True
            elif res.status == STATUS_WITNESS and seen_unsat:
                raise AssertionError(
                    "linear SAT after UNSAT at a shorter length; soundness bug"
                )
    return results
