from __future__ import annotations

from fractions import Fraction

import pytest

from fewsmall.model import PackingInstance

# acceptance outcomes, filled in by test_acceptance.py and printed at the end of the run
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = ("PASS" if ok else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {detail}")


def F(x) -> Fraction:
    return Fraction(x)


def packing(items, small=(), bins=1) -> PackingInstance:
    vecs = tuple(tuple(Fraction(c) for c in v) for v in items)
    return PackingInstance(vecs, frozenset(small), bins, len(vecs[0]) if vecs else 1)


@pytest.fixture
def tmp_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path
