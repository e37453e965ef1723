"""Deterministic reports: one JSON document and one markdown page per command.

Bodies carry no timestamps, so identical inputs and seed give byte-identical
files.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib.resources import files
from pathlib import Path
from typing import Any, Iterable

STATUSES = ("pass", "fail", "error")


@lru_cache(maxsize=None)
def citations() -> dict[str, Any]:
    """Source results behind each check id and radical formula, shipped as package data."""
    return json.loads(files(__package__).joinpath("citations.json").read_text(encoding="utf-8"))


def check_citation(check: str) -> str | None:
    return citations()["checks"].get(check)


def radical_citation(family: str, kind: str) -> str | None:
    return citations()["radicals"].get(family, {}).get(kind)


def write_json(path: Path, data: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def digest(path: str | Path) -> dict[str, str]:
    p = Path(path)
    if p.is_dir():
        h = hashlib.sha256()
        for child in sorted(q for q in p.rglob("*") if q.is_file()):
            h.update(child.relative_to(p).as_posix().encode())
            h.update(b"\0")
            h.update(child.read_bytes())
        return {"path": p.as_posix(), "sha256": h.hexdigest()}
    return {"path": p.as_posix(), "sha256": hashlib.sha256(p.read_bytes()).hexdigest()}


@dataclass
class Report:
    command: str
    inputs: list[dict[str, str]]
    seed: int
    config: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    status: str = "pass"
    lines: list[str] = field(default_factory=list)

    def fail(self) -> None:
        if self.status == "pass":
            self.status = "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "config": self.config,
            "inputs": self.inputs,
            "results": self.results,
            "seed": self.seed,
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        head = [
            f"# gmpath {self.command}",
            "",
            f"- Status: **{self.status}**",
            f"- Seed: `{self.seed}`",
        ]
        for item in self.inputs:
            head.append(f"- Input: `{item['path']}` (sha256 `{item['sha256'][:16]}`)")
        return "\n".join(head + [""] + self.lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "structured" else self.to_markdown()

    def write(self, report_dir: Path) -> tuple[Path, Path]:
        json_path = report_dir / f"{self.command}.json"
        md_path = report_dir / f"{self.command}.md"
        write_text(json_path, self.to_json())
        write_text(md_path, self.to_markdown())
        return json_path, md_path


def table(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> list[str]:
    """Markdown table lines."""
    header = list(header)
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for row in rows:
        out.append("| " + " | ".join(str(c) for c in row) + " |")
    return out


def summarize_basis(literals: list[str], threshold: int) -> list[str] | dict[str, int]:
    """Radical bases above ``threshold`` elements are reported by dimension only."""
    if len(literals) > threshold:
        return {"dimension": len(literals)}
    return literals
