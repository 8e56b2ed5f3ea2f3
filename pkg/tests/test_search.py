from fractions import Fraction
from itertools import product

import pytest

import oracles
from circwords import (
    SearchConfig,
    Word,
    circular_is_r_free,
    is_r_free,
    search_all_lengths,
    search_witness,
)
from circwords.search import STATUS_EXHAUSTED, STATUS_REFUTED, STATUS_WITNESS


def naive_sat(n, length, r, strict, circular):
    return any(
        oracles.naive_is_free(ls, r, strict, circular)
        for ls in product(range(n), repeat=length)
    )


def is_canonical(letters):
    top = -1
    for a in letters:
        if a > top + 1:
            return False
        top = max(top, a)
    return True


def test_witness_example_ternary_circular_length_six():
    res = search_witness(SearchConfig(3, Fraction(2), circular=True, length=6))
    assert res.status == STATUS_WITNESS
    # the classic square-free circle on three letters, up to renaming
    target = (0, 1, 2, 0, 2, 1)
    found = res.witness.letters
    matches = False
    for j in range(6):
        rot = found[j:] + found[:j]
        renaming = {}
        ok = True
        for a, b in zip(rot, target):
            if renaming.setdefault(a, b) != b:
                ok = False
                break
        matches = matches or (ok and len(set(renaming.values())) == len(renaming))
    assert matches
    assert is_canonical(found)


def test_refutation_examples():
    res = search_witness(SearchConfig(2, Fraction(2), circular=True, length=4))
    assert res.status == STATUS_REFUTED
    res = search_witness(SearchConfig(1, Fraction(2), length=2))
    assert res.status == STATUS_REFUTED


def test_search_agrees_with_naive_enumeration():
    for n, r, strict, circular, max_len in (
        (2, Fraction(7, 3), True, False, 10),
        (2, Fraction(5, 2), True, True, 9),
        (3, Fraction(7, 4), False, False, 8),
        (3, Fraction(2), False, True, 8),
        (2, Fraction(3, 2), False, False, 6),
    ):
        for length in range(1, max_len + 1):
            cfg = SearchConfig(n, r, strict=strict, circular=circular, length=length)
            res = search_witness(cfg)
            want = naive_sat(n, length, r, strict, circular)
            assert (res.status == STATUS_WITNESS) == want, (n, r, strict, circular, length)


def test_witness_is_lexicographically_least_canonical():
    for length in (5, 7, 9):
        cfg = SearchConfig(2, Fraction(5, 2), strict=True, circular=True, length=length)
        res = search_witness(cfg)
        assert res.status == STATUS_WITNESS
        best = None
        for ls in product(range(2), repeat=length):
            if is_canonical(ls) and oracles.naive_is_free(
                ls, Fraction(5, 2), True, True
            ):
                best = ls
                break
        assert res.witness.letters == best


def test_witness_passes_independent_freeness():
    cfg = SearchConfig(3, Fraction(7, 4), length=12)
    res = search_witness(cfg)
    assert res.status == STATUS_WITNESS
    assert is_r_free(res.witness, Fraction(7, 4)).free
    cfg = SearchConfig(3, Fraction(2), circular=True, length=11)
    res = search_witness(cfg)
    assert circular_is_r_free(res.witness, Fraction(2)).free


def test_determinism_across_worker_counts():
    def snapshot(workers):
        cfg = SearchConfig(
            3, Fraction(2), circular=True, length_range=(3, 10), workers=workers
        )
        return [
            (r.status, r.witness.letters if r.witness else None, r.nodes)
            for r in search_all_lengths(cfg)
        ]

    assert snapshot(1) == snapshot(8)


def test_budget_exhaustion_is_a_status():
    res = search_witness(
        SearchConfig(3, Fraction(2), circular=True, length=12, node_budget=5)
    )
    assert res.status == STATUS_EXHAUSTED
    assert res.certificate is None
    # a generous budget still completes
    res = search_witness(
        SearchConfig(3, Fraction(2), circular=True, length=12, node_budget=10**6)
    )
    assert res.status == STATUS_WITNESS


def test_empty_range_gives_empty_table():
    with pytest.raises(ValueError):
        SearchConfig(3, Fraction(2), length_range=(5, 4))
    cfg = SearchConfig(3, Fraction(2), length_range=(5, 5))
    assert len(search_all_lengths(cfg)) == 1


def test_linear_prefix_closure_on_tables():
    cfg = SearchConfig(3, Fraction(7, 4), length_range=(1, 10))
    results = search_all_lengths(cfg)
    sat = [r.status == STATUS_WITNESS for r in results]
    assert sat == sorted(sat, reverse=True)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(0, Fraction(2), length=3)
    with pytest.raises(ValueError):
        SearchConfig(2, Fraction(1), length=3)
    with pytest.raises(ValueError):
        SearchConfig(2, Fraction(2))
    with pytest.raises(ValueError):
        SearchConfig(2, Fraction(2), length=3, length_range=(1, 2))


def test_workers_env_default(monkeypatch):
    cfg = SearchConfig(2, Fraction(2), length=3)
    monkeypatch.delenv("CIRCWORDS_WORKERS", raising=False)
    assert cfg.effective_workers() == 1
    monkeypatch.setenv("CIRCWORDS_WORKERS", "6")
    assert cfg.effective_workers() == 6
    assert SearchConfig(2, Fraction(2), length=3, workers=2).effective_workers() == 2
