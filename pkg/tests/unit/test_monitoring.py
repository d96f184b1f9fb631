import pytest

from qdepth.errors import EmptyPosetError
from qdepth.monitoring import (
    REGISTRY,
    record_oracle_nodes,
    record_qdepth,
    record_scan_cell,
    track_command,
    write_metrics,
)


def sample(name, **labels):
    return REGISTRY.get_sample_value(name, labels or None) or 0.0


def test_track_command_ok():
    before = sample("qdepth_commands_total", command="unit-ok", status="ok")
    with track_command("unit-ok"):
        pass
    assert sample("qdepth_commands_total", command="unit-ok", status="ok") == before + 1
    assert sample("qdepth_command_duration_seconds_count", command="unit-ok") >= 1


def test_track_command_labels_errors():
    with pytest.raises(EmptyPosetError):
        with track_command("unit-err"):
            raise EmptyPosetError()
    assert sample("qdepth_commands_total", command="unit-err", status="EmptyPosetError") == 1


def test_record_counters():
    qdepth_before = sample("qdepth_computations_total")
    nodes_before = sample("qdepth_oracle_search_nodes_total")
    record_qdepth()
    record_oracle_nodes(5)
    record_oracle_nodes(0)
    assert sample("qdepth_computations_total") == qdepth_before + 1
    assert sample("qdepth_oracle_search_nodes_total") == nodes_before + 5


def test_record_scan_cell():
    cells_before = sample("qdepth_scan_cells_total", proof_status="open")
    violations_before = sample("qdepth_scan_violations_total")
    record_scan_cell("open", holds=True)
    record_scan_cell("open", holds=False)
    assert sample("qdepth_scan_cells_total", proof_status="open") == cells_before + 2
    assert sample("qdepth_scan_violations_total") == violations_before + 1


def test_write_metrics(tmp_path):
    path = tmp_path / "qdepth.prom"
    record_qdepth()
    assert write_metrics(str(path)) is True
    text = path.read_text()
    assert "qdepth_computations_total" in text


def test_write_metrics_without_path():
    assert write_metrics(None) is False
    assert write_metrics("") is False
