"""
Acceptance battery: one test per criterion, each printing a single
PASS/FAIL line (visible even without ``-s``).
"""

import pytest

from diffschub import acceptance


def _report(result, capsys):
    with capsys.disabled():
        print("\n" + result.line())
    return result


@pytest.mark.parametrize("number", range(1, 13))
def test_criterion(number, capsys):
    result = _report(acceptance.CRITERIA[number](), capsys)
    assert result.passed, result.detail


def test_criterion_13_benchmark(tmp_path, capsys):
    path = tmp_path / "bench.csv"
    result = _report(acceptance.criterion_13(csv_path=path), capsys)
    # only agreement of the two methods is asserted; the growth trend is informational
    assert result.passed, result.detail
    rows = path.read_text().splitlines()
    assert rows[0].startswith("size") and len(rows) == 8
