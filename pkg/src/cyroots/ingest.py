"""Parse user-supplied Hodge-number lists.

File format: UTF-8 text, one record per line, two (cy3) or three (cy4)
non-negative integers separated by commas or whitespace.  `#` starts a
comment, blank lines are skipped.  Duplicates are retained in order;
pipelines deduplicate by default.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .hodge import HodgeCY3, HodgeCY4


class IngestError(ValueError):
    pass


class MalformedLineError(IngestError):
    def __init__(self, path, lineno, text, why):
        super().__init__(f"{path}:{lineno}: {why}: {text!r}")
        self.lineno = lineno


class WrongArityError(MalformedLineError):
    pass


class NegativeHodgeError(MalformedLineError):
    pass


_SPLIT = re.compile(r"[,\s]+")

_KINDS = {"cy3": (2, HodgeCY3), "cy4": (3, HodgeCY4)}


@dataclass(frozen=True)
class HodgeFile:
    path: str
    kind: str
    records: tuple
    raw_count: int
    distinct_count: int


def parse(path, kind: str) -> HodgeFile:
    """Read a Hodge list; any malformed line rejects the whole file."""
    if kind not in _KINDS:
        raise IngestError(f"unknown kind {kind!r}; expected 'cy3' or 'cy4'")
    arity, ctor = _KINDS[kind]
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [f for f in _SPLIT.split(line) if f]
            if len(fields) != arity:
                raise WrongArityError(path, lineno, raw.rstrip("\n"),
                                      f"expected {arity} integers, got {len(fields)}")
            try:
                values = [int(f) for f in fields]
            except ValueError:
                raise MalformedLineError(path, lineno, raw.rstrip("\n"),
                                         "non-integer field") from None
            if any(v < 0 for v in values):
                raise NegativeHodgeError(path, lineno, raw.rstrip("\n"),
                                         "negative Hodge number")
            records.append(ctor(*values))
    records = tuple(records)
    return HodgeFile(
        path=str(path),
        kind=kind,
        records=records,
        raw_count=len(records),
        distinct_count=len(set(records)),
    )


def dedup(records: Sequence) -> list:
    """First-occurrence-order distinct records; idempotent."""
    return list(dict.fromkeys(records))


def write(path, records: Sequence) -> None:
    """Write records in the same format parse() reads (comma separated)."""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            if isinstance(r, HodgeCY3):
                fh.write(f"{r.h11},{r.h21}\n")
            elif isinstance(r, HodgeCY4):
                fh.write(f"{r.h11},{r.h21},{r.h31}\n")
            else:
                raise IngestError(f"cannot serialize record {r!r}")
