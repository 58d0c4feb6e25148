"""Verification reports: line-oriented text plus CSV (suite, case_id, status, witness)."""

from __future__ import annotations

import csv
import io
import os
import tempfile
from dataclasses import dataclass, field
from typing import Iterable, Optional

PASS, FAIL, INFO = "pass", "fail", "info"


@dataclass(frozen=True)
class Case:
    suite: str
    case_id: str
    status: str
    witness: str = ""


@dataclass
class Report:
    cases: list[Case] = field(default_factory=list)

    def add(self, suite: str, case_id: str, ok: bool, witness: str = "") -> None:
        self.cases.append(Case(suite, case_id, PASS if ok else FAIL, witness))

    def info(self, suite: str, case_id: str, witness: str = "") -> None:
        self.cases.append(Case(suite, case_id, INFO, witness))

    def merge(self, *others: "Report") -> "Report":
        out = Report(list(self.cases))
        for o in others:
            out.cases.extend(o.cases)
        return out

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if c.status == FAIL]

    def first_failure(self) -> Optional[Case]:
        fs = self.failures
        return fs[0] if fs else None

    def find(self, case_id: str) -> Optional[Case]:
        for c in self.cases:
            if c.case_id == case_id:
                return c
        return None

    def to_text(self) -> str:
        lines = []
        for c in self.cases:
            line = f"{c.suite}\t{c.case_id}\t{c.status}"
            if c.witness:
                line += f"\t{c.witness}"
            lines.append(line)
        return "\n".join(lines) + ("\n" if lines else "")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "case_id", "status", "witness"])
        for c in self.cases:
            w.writerow([c.suite, c.case_id, c.status, c.witness])
        return buf.getvalue()

    def __str__(self) -> str:
        return self.to_text()


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temp file in the same directory and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_text(rows: Iterable[Iterable[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()
