from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

from . import __version__

SCHEMA = 1
PLUMBING = "plumbing"


@dataclass
class ReportItem:
    check_id: str
    citation: str
    status: str  # pass | fail | skip
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0


@dataclass
class Report:
    command: str
    groups: list[dict] = field(default_factory=list)
    items: list[ReportItem] = field(default_factory=list)
    version: str = __version__

    def add(self, check_id: str, citation: str, ok: bool | None, details: dict | None = None, wall_time: float = 0.0):
        status = "skip" if ok is None else ("pass" if ok else "fail")
        item = ReportItem(check_id, citation or PLUMBING, status, details or {}, round(wall_time, 4))
        self.items.append(item)
        return item

    @contextmanager
    def timed(self, check_id: str, citation: str):
        """Run a block that fills ``result['ok']`` (and optional details) and record it."""
        result: dict = {"ok": None, "details": {}}
        t0 = time.perf_counter()
        try:
            yield result
        except Exception as exc:  # noqa: BLE001 - a crashing check is a failed check, not a crashed run
            result["ok"] = False
            result["details"] = {"error": f"{type(exc).__name__}: {exc}"}
        self.add(check_id, citation, result["ok"], result["details"], time.perf_counter() - t0)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for item in self.items:
            counts[item.status] += 1
        counts["total"] = len(self.items)
        return counts

    @property
    def ok(self) -> bool:
        return all(item.status != "fail" for item in self.items)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "tool": "weylrack",
            "version": self.version,
            "command": self.command,
            "groups": self.groups,
            "items": [asdict(item) for item in self.items],
            "summary": self.summary,
        }

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")

    def format_lines(self) -> list[str]:
        lines = [f"[{item.status.upper():4}] {item.check_id}  ({item.citation})" for item in self.items]
        s = self.summary
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skip']} skipped")
        return lines
