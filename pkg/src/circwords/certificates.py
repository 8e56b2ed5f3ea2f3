"""Machine-checkable certificates and their serialization.

A certificate records a claim (constructed word, search witness, or search
refutation), the parameters under which it was established, and the checks
performed with their outcomes.  Re-validation never trusts the producer;
see the certify module.

The wire format is a line-based text document with a fixed field order, so
identical inputs always serialize to identical bytes: words in their string
form, rationals as "p/q", content hashes in hexadecimal, and a closing
"end" line that exposes truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .words import Word, format_word, parse_word

MAGIC = "circwords-certificate v1"

KIND_CONSTRUCTION = "construction"
KIND_SEARCH_WITNESS = "search-witness"
KIND_SEARCH_REFUTATION = "search-refutation"

_KINDS = (KIND_CONSTRUCTION, KIND_SEARCH_WITNESS, KIND_SEARCH_REFUTATION)

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"
CONDITIONAL = "CONDITIONAL"

_OUTCOMES = (PASS, FAIL, SKIPPED, CONDITIONAL)


@dataclass(frozen=True)
class CheckRecord:
    name: str
    outcome: str
    detail: str = ""

    def __post_init__(self) -> None:
        if self.outcome not in _OUTCOMES:
            raise ValueError(f"unknown check outcome {self.outcome!r}")
        if "\n" in self.name or "\n" in self.detail or " " in self.name:
            raise ValueError("check names are single tokens, details one line")


@dataclass(frozen=True)
class Certificate:
    kind: str
    params: tuple[tuple[str, str], ...]
    checks: tuple[CheckRecord, ...]
    word: Optional[Word] = None
    table_hash: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    @property
    def status(self) -> str:
        return FAIL if any(c.outcome == FAIL for c in self.checks) else PASS

    def param(self, key: str) -> str:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)


def serialize(cert: Certificate) -> str:
    lines = [MAGIC, f"kind: {cert.kind}"]
    for key, value in cert.params:
        lines.append(f"param: {key} {value}")
    if cert.word is not None:
        lines.append(f"word: {format_word(cert.word)}")
        lines.append(f"word-alphabet: {cert.word.alphabet_size}")
    if cert.table_hash is not None:
        lines.append(f"table-hash: {cert.table_hash}")
    for check in cert.checks:
        suffix = f" {check.detail}" if check.detail else ""
        lines.append(f"check: {check.name} {check.outcome}{suffix}")
    lines.append(f"status: {cert.status}")
    lines.append("end")
    return "\n".join(lines) + "\n"


class MalformedCertificate(ValueError):
    pass


def deserialize(text: str) -> Certificate:
    return _parse_block([ln for ln in text.splitlines()], require_single=True)


def deserialize_many(text: str) -> list[Certificate]:
    """Parse a document containing one or more certificates."""
    blocks: list[list[str]] = []
    current: list[str] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.strip() == MAGIC and current:
            blocks.append(current)
            current = []
        current.append(line)
    if current:
        blocks.append(current)
    if not blocks:
        raise MalformedCertificate("no certificate found")
    return [_parse_block(b) for b in blocks]


def _parse_block(lines: list[str], require_single: bool = False) -> Certificate:
    lines = [ln for ln in lines if ln.strip()]
    if not lines or lines[0].strip() != MAGIC:
        raise MalformedCertificate("missing certificate header")
    if lines[-1].strip() != "end":
        raise MalformedCertificate("truncated certificate (no end line)")
    body = lines[1:-1]
    if require_single and any(ln.strip() == MAGIC for ln in body):
        raise MalformedCertificate("multiple certificates; use deserialize_many")

    kind: Optional[str] = None
    params: list[tuple[str, str]] = []
    checks: list[CheckRecord] = []
    word_text: Optional[str] = None
    word_alphabet: Optional[int] = None
    table_hash: Optional[str] = None
    status: Optional[str] = None

    for line in body:
        key, sep, rest = line.partition(":")
        if not sep:
            raise MalformedCertificate(f"malformed line {line!r}")
        key, rest = key.strip(), rest.strip()
        if key == "kind":
            kind = rest
        elif key == "param":
            name, _, value = rest.partition(" ")
            if not value:
                raise MalformedCertificate(f"malformed param line {line!r}")
            params.append((name, value))
        elif key == "word":
            word_text = rest
        elif key == "word-alphabet":
            word_alphabet = int(rest)
        elif key == "table-hash":
            table_hash = rest
        elif key == "check":
            parts = rest.split(" ", 2)
            if len(parts) < 2:
                raise MalformedCertificate(f"malformed check line {line!r}")
            name, outcome = parts[0], parts[1]
            detail = parts[2] if len(parts) == 3 else ""
            if outcome not in _OUTCOMES:
                raise MalformedCertificate(f"unknown outcome in {line!r}")
            checks.append(CheckRecord(name, outcome, detail))
        elif key == "status":
            status = rest
        else:
            raise MalformedCertificate(f"unknown field {key!r}")

    if kind is None:
        raise MalformedCertificate("certificate has no kind")
    word = None
    if word_text is not None:
        if word_alphabet is None:
            raise MalformedCertificate("word without word-alphabet")
        word = parse_word(word_text, word_alphabet)
    try:
        cert = Certificate(kind, tuple(params), tuple(checks), word, table_hash)
    except ValueError as exc:
        raise MalformedCertificate(str(exc)) from None
    if status is not None and status != cert.status:
        raise MalformedCertificate(
            f"recorded status {status} contradicts checks ({cert.status})"
        )
    return cert


def emit(cert: Certificate, path) -> None:
    """Write the serialized certificate; round-trips through deserialize."""
    from pathlib import Path

    Path(path).write_text(serialize(cert))
