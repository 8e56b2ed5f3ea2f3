import dataclasses

import pytest

from circwords import (
    Word,
    build_w,
    full_pipeline,
    in_psi_kernel,
    lambda_membership,
    sigma,
    verify_construction,
)
from circwords.certificates import CONDITIONAL, FAIL, PASS, SKIPPED
from tests_tables import make_table_45


def test_build_examples():
    trace = build_w(45, 1)
    assert len(trace.w.letters) == 1024
    assert trace.w.letters[0] == 7
    counts = [trace.w.letters.count(a) for a in range(1, 8)]
    assert all(c % 4 == 0 for c in counts)
    with pytest.raises(ValueError):
        build_w(44, 1)
    with pytest.raises(ValueError):
        build_w(45, 0)


def test_build_trace_structure():
    trace = build_w(45, 1)
    p = trace.params
    quarter = p.M // 4
    assert len(trace.u.letters) == quarter
    assert trace.u.letters[0] == trace.u.letters[-1] == 2
    assert 1 <= trace.s <= 4
    assert trace.s == 4 - (trace.u.count(2) % 4)
    assert 2 * trace.s <= quarter
    # v = 3^s 2^s 1^(quarter - 2s)
    v = trace.v.letters
    assert v == (3,) * trace.s + (2,) * trace.s + (1,) * (quarter - 2 * trace.s)

    # the interleaving decomposes back into its strands
    w = trace.w.letters
    odd = tuple(w[i] for i in range(1, len(w), 2))
    assert odd == trace.u.letters + sigma(trace.u).letters
    evens2 = tuple(w[i] for i in range(2, len(w), 4))
    assert evens2 == v

    # count identity behind kernel membership
    assert w.count(2) == trace.u.count(2) + trace.s
    assert w.count(2) == w.count(3)

    assert lambda_membership(p, 1, trace.w)
    assert in_psi_kernel(p.m, trace.w)


def test_counts_identity_across_instances():
    for n, t in ((45, 1), (45, 2)):
        trace = build_w(n, t)
        w = trace.w.letters
        assert w.count(2) == w.count(3) == trace.u.count(2) + trace.s


def test_verify_pass():
    cert = verify_construction(build_w(45, 1))
    assert cert.status == PASS
    assert [c.outcome for c in cert.checks] == [PASS, PASS, PASS]
    assert cert.param("M") == "1024"


def test_verify_negative_control():
    trace = build_w(45, 1)
    bad = dataclasses.replace(trace, w=Word((1,) * 1024, 7))
    cert = verify_construction(bad)
    assert cert.status == FAIL
    by_name = {c.name: c for c in cert.checks}
    assert by_name["structured-positions"].outcome == FAIL
    assert by_name["kernel-membership"].outcome == PASS
    scan = by_name["circular-kernel-repetition-scan"]
    assert scan.outcome == FAIL
    assert "period=4" in scan.detail


def test_verify_flags_single_structured_position():
    trace = build_w(45, 1)
    tampered = list(trace.w.letters)
    tampered[16] = 1  # prescribed slot
    cert = verify_construction(dataclasses.replace(trace, w=Word(tuple(tampered), 7)))
    by_name = {c.name: c for c in cert.checks}
    assert by_name["structured-positions"].outcome == FAIL


def test_verify_rejects_malformed_trace():
    trace = build_w(45, 1)
    with pytest.raises(ValueError, match="malformed trace"):
        verify_construction(dataclasses.replace(trace, w=Word((1, 2, 3, 4), 7)))


def test_full_pipeline_conditional():
    cert = full_pipeline(45, 1)
    assert cert.status == PASS
    by_name = {c.name: c for c in cert.checks}
    assert by_name["final-word-length"].detail == "1036288"
    assert by_name["final-word-freeness"].outcome == CONDITIONAL
    assert cert.table_hash is None
    with pytest.raises(ValueError):
        full_pipeline(44, 1)


def test_full_pipeline_with_table_skips_scan_below_budget():
    table = make_table_45()
    cert = full_pipeline(45, 1, table, scan_budget=4096)
    by_name = {c.name: c for c in cert.checks}
    assert by_name["final-word-emitted"].outcome == PASS
    assert by_name["final-word-emitted"].detail == "length 1036288"
    assert by_name["final-word-scan"].outcome == SKIPPED
    assert "exceeds scan budget 4096" in by_name["final-word-scan"].detail
    assert cert.table_hash == table.content_hash()
    # the synthetic table flunks the sampled kernel crosscheck
    assert by_name["table-kernel-crosscheck"].outcome == FAIL


def test_full_pipeline_rejects_mismatched_table():
    table = make_table_45()
    with pytest.raises(ValueError, match="table"):
        full_pipeline(51, 1, table)
