import io

import pytest

from chromalab.exp.reporting import (
    REPORT_COLUMNS,
    RunReport,
    timings_by_family,
    write_reports_csv,
)


def _report(instance_id: str, family: str, elapsed_ms: float, chi: int | None = None) -> RunReport:
    return RunReport(
        instance_id=instance_id,
        family=family,
        n=33,
        omega=9,
        colors=11,
        budget=11,
        bound_kind="11/9",
        elapsed_ms=elapsed_ms,
        verified=True,
        oracle_chi=chi,
    )


def test_gap_needs_oracle() -> None:
    assert _report("a", "emerald_equal", 1.0).gap is None
    assert _report("a", "emerald_equal", 1.0, chi=11).gap == 0


def test_to_dict_has_schema_and_rounds_time() -> None:
    row = _report("a", "gx", 1.23456).to_dict()
    assert row["schema"] == 1
    assert row["elapsed_ms"] == 1.235
    assert set(REPORT_COLUMNS) <= set(row)


def test_write_reports_csv_blank_cells() -> None:
    stream = io.StringIO()
    write_reports_csv(stream, [_report("e1", "emerald_equal", 2.0), _report("e2", "gx", 3.0, 10)])
    lines = stream.getvalue().splitlines()

    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert lines[1] == "e1,emerald_equal,33,9,11,11,11/9,2.0,True,,"
    assert lines[2].endswith(",10,1")


def test_timings_by_family() -> None:
    reports = [
        _report("a", "gx", 1.0),
        _report("b", "gx", 3.0),
        _report("c", "bracelet_random", 5.0),
    ]
    timings = timings_by_family(reports)

    assert [t.family for t in timings] == ["bracelet_random", "gx"]
    gx = timings[1]
    assert gx.count == 2
    assert gx.mean_ms == pytest.approx(2.0)
    assert gx.max_ms == pytest.approx(3.0)
