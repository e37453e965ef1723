"""Shared helpers for the gmpath test suite."""

from __future__ import annotations

from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parents[2]
CORPUS = REPO / "verification" / "corpus"
NEGATIVE = REPO / "verification" / "negative"


@pytest.fixture
def corpus() -> Path:
    return CORPUS


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> Path:
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return p

    return _write
