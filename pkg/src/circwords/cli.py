"""Command-line surface.

Exit codes: 0 the claim holds or a witness was found, 1 the claim fails or
was refuted, 2 usage error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import beta as beta_mod
from . import certificates, construction
from . import search as search_mod
from .carpi import load_fn_table
from .certify import INVALID, certify as run_certify
from .pansiot import gamma
from .words import (
    CircularWord,
    circular_is_r_free,
    exponent_report,
    format_ratio,
    format_word,
    is_r_free,
    parse_ratio,
    parse_word,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


def _read_word_argument(text: str):
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text().strip()
        except OSError as exc:
            raise _UsageError(f"cannot read word file: {exc}") from None
    try:
        word = parse_word(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if not word.letters:
        raise _UsageError("empty word")
    return word


def _lengths(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise _UsageError(f"malformed length range {text!r}; expected A..B")
    return int(lo), int(hi)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circwords",
        description="Exact repetition machinery for linear and circular words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponent", help="minimal period and exponent of a word")
    p.add_argument("word")

    p = sub.add_parser("check", help="r-free / r+-free verdict with witness")
    p.add_argument("--r", required=True, metavar="P/Q")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--circular", action="store_true")
    p.add_argument("word", metavar="WORD|@file")

    p = sub.add_parser("gamma", help="codeword of a binary word")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("bits")

    p = sub.add_parser("beta", help="structured sequence utilities")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--length", type=int)
    group.add_argument("--bracket", type=int)

    p = sub.add_parser("construct", help="build and verify the kernel word")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--fn-table", metavar="PATH")
    p.add_argument("--scan-budget", type=int, default=construction.DEFAULT_SCAN_BUDGET)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("search", help="backtracking search for free words")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--r", required=True, metavar="P/Q")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--circular", action="store_true")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--length", type=int)
    group.add_argument("--lengths", metavar="A..B")
    p.add_argument("--workers", type=int)
    p.add_argument("--budget", type=int, metavar="NODES")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("certify", help="re-validate a certificate document")
    p.add_argument("path")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    return {
        "exponent": _cmd_exponent,
        "check": _cmd_check,
        "gamma": _cmd_gamma,
        "beta": _cmd_beta,
        "construct": _cmd_construct,
        "search": _cmd_search,
        "certify": _cmd_certify,
    }[args.command](args)


def _cmd_exponent(args) -> int:
    word = _read_word_argument(args.word)
    rep = exponent_report(word)
    print(f"length={rep.length} period={rep.period} exponent={format_ratio(rep.exponent)}")
    return EXIT_OK


def _cmd_check(args) -> int:
    r = parse_ratio(args.r)
    if r <= 1:
        raise _UsageError("threshold must exceed 1")
    word = _read_word_argument(args.word)
    if args.circular:
        result = circular_is_r_free(CircularWord(word), r, args.strict)
    else:
        result = is_r_free(word, r, args.strict)
    kind = "circular" if args.circular else "linear"
    bound = f"{format_ratio(r)}{'+' if args.strict else ''}"
    if result.free:
        print(f"FREE {kind} threshold={bound}")
        return EXIT_OK
    rep = result.witness
    print(
        f"NOT-FREE {kind} threshold={bound} witness={format_word(result.witness_word)} "
        f"start={rep.start} period={rep.period} exponent={format_ratio(rep.exponent)}"
    )
    return EXIT_FAIL


def _cmd_gamma(args) -> int:
    word = _read_word_argument(args.bits)
    print(format_word(gamma(args.n, word)))
    return EXIT_OK


def _cmd_beta(args) -> int:
    if args.length is not None:
        if args.length < 0:
            raise _UsageError("length must be nonnegative")
        print("".join(map(str, beta_mod.beta_prefix(args.length).letters)))
        return EXIT_OK
    try:
        start, factor = beta_mod.factor_bracketed_by_two(args.bracket)
    except AssertionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"start={start} factor={format_word(factor)}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    table = None
    if args.fn_table:
        try:
            table = load_fn_table(args.fn_table)
        except OSError as exc:
            raise _UsageError(f"cannot read table: {exc}") from None
    cert = construction.full_pipeline(args.n, args.t, table, args.scan_budget)
    text = certificates.serialize(cert)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return EXIT_OK if cert.status == certificates.PASS else EXIT_FAIL


def _cmd_search(args) -> int:
    r = parse_ratio(args.r)
    common = dict(
        alphabet_size=args.n,
        threshold=r,
        strict=args.strict,
        circular=args.circular,
        workers=args.workers,
        node_budget=args.budget,
    )
    if args.length is not None:
        config = search_mod.SearchConfig(length=args.length, **common)
        results = [search_mod.search_witness(config)]
    else:
        config = search_mod.SearchConfig(length_range=_lengths(args.lengths), **common)
        results = search_mod.search_all_lengths(config)

    documents = []
    for res in results:
        line = f"length={res.length} status={res.status}"
        if res.witness is not None:
            line += f" witness={format_word(res.witness)}"
        if res.status == search_mod.STATUS_REFUTED:
            line += f" nodes={res.nodes}"
        print(line)
        if res.certificate is not None:
            documents.append(certificates.serialize(res.certificate))
    if args.out:
        Path(args.out).write_text("\n".join(documents))

    statuses = {res.status for res in results}
    if search_mod.STATUS_EXHAUSTED in statuses:
        return EXIT_BUDGET
    if search_mod.STATUS_REFUTED in statuses:
        return EXIT_FAIL
    return EXIT_OK


def _cmd_certify(args) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read certificate: {exc}") from None
    try:
        certs = certificates.deserialize_many(text)
        outcomes = [run_certify(cert) for cert in certs]
    except certificates.MalformedCertificate as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    worst = EXIT_OK
    for cert, outcome in zip(certs, outcomes):
        detail = f" {outcome.detail}" if outcome.detail else ""
        print(f"{cert.kind}: {outcome.verdict}{detail}")
        if outcome.verdict == INVALID:
            worst = EXIT_FAIL
    return worst


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
