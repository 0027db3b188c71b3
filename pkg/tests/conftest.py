import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from fixture_corpus import FIXTURE  # noqa: E402

DATA = Path(__file__).resolve().parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def fixture_jsonl(tmp_path):
    path = tmp_path / "records.jsonl"
    path.write_text("".join(json.dumps(rec, ensure_ascii=False) + "\n" for rec, _ in FIXTURE),
                    encoding="utf-8")
    return path


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
