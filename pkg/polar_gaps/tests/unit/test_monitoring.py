import pytest

from ...src.utils.monitoring import RunMonitor, render_table, summary_table


@pytest.mark.unit
def test_disabled_monitor_records_nothing():
    """Test that a disabled monitor leaves no trace."""
    monitor = RunMonitor(enabled=False)
    with monitor.track("step"):
        pass
    assert monitor.elapsed_for("step") is None
    assert monitor.get_summary() == {}


@pytest.mark.unit
def test_enabled_monitor_tracks_steps():
    """Test elapsed time and memory sampling of tracked steps."""
    monitor = RunMonitor(enabled=True)
    with monitor.track("first"):
        sum(range(1000))
    with monitor.track("second"):
        pass
    assert monitor.elapsed_for("first") >= 0
    summary = monitor.get_summary()
    assert summary["tracked_steps"] == 2
    assert summary["peak_rss_mb"] > 0


@pytest.mark.unit
def test_monitor_records_failed_steps():
    """Test that a step raising an exception is still timed."""
    monitor = RunMonitor(enabled=True)
    with pytest.raises(RuntimeError):
        with monitor.track("failing"):
            raise RuntimeError("boom")
    assert monitor.elapsed_for("failing") is not None


@pytest.mark.unit
def test_summary_table_columns():
    """Test column order and rendering of summary tables."""
    rows = [{"b": 2, "a": 1}, {"a": 3, "b": 4}]
    frame = summary_table(rows, ["a", "b"])
    assert list(frame.columns) == ["a", "b"]
    assert frame["a"].tolist() == [1, 3]
    assert render_table(frame).splitlines()[0].split() == ["a", "b"]
    assert render_table(summary_table([])) == "(no rows)"
