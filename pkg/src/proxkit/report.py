"""Line-oriented, deterministic command reports.

Text form is one ``key: value`` per line, with checks rendered as
``check.<name>: pass`` or ``check.<name>: FAIL witness=...`` so CI logs can
be grepped. :meth:`Report.to_json` gives the same content as JSON.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    note: str = ""


@dataclass
class Report:
    command: str
    entries: list[tuple[str, Any]] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)

    def add(self, key: str, value: Any) -> None:
        self.entries.append((key, value))

    def check(self, name: str, passed: bool, witness: Any = None, note: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), witness, note))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"{k}: {_show(v)}" for k, v in self.entries]
        for c in self.checks:
            if c.passed:
                line = f"check.{c.name}: pass"
            else:
                line = f"check.{c.name}: FAIL"
                if c.witness is not None:
                    line += f" witness={_show(c.witness)}"
            if c.note:
                line += f" ({c.note})"
            lines.append(line)
        lines.append(f"status: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "entries": {k: _jsonable(v) for k, v in self.entries},
            "checks": [{"name": c.name, "passed": c.passed, "witness": _jsonable(c.witness),
                        "note": c.note} for c in self.checks],
            "status": "pass" if self.passed else "fail",
        }
        body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in doc.items())
        return "{\n" + body + "\n}\n"


def _show(v) -> str:
    if isinstance(v, (list, tuple)):
        inner = ", ".join(_show(x) for x in v)
        return f"[{inner}]" if isinstance(v, list) else f"({inner})"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v
