"""
Tests for result persistence.
"""
import json

import pandas as pd
import pytest

from src.schemas import ExperimentRecord
from src.services.records import (
    COLUMNS,
    read_records,
    records_frame,
    sorted_records,
    write_records,
    write_records_json,
)


def record(network="MN", metric="dA", fraction=0.01, mean=1.5, std=0.25, **kw) -> ExperimentRecord:
    fields = dict(
        network=network, mode="edges", fraction=fraction, metric=metric,
        mean=mean, std=std, nrep=100, base_seed=0,
    )
    fields.update(kw)
    return ExperimentRecord(**fields)


def test_write_records_empty(tmp_path):
    """Test an empty list writes only the header."""
    path = tmp_path / "empty.csv"
    write_records([], str(path))

    assert path.read_text() == ",".join(COLUMNS) + "\n"


def test_write_records_format(tmp_path):
    """Test rendering of fractions and statistics."""
    path = tmp_path / "r.csv"
    write_records([record(fraction=0.1, mean=1 / 3, std=2 / 3, base_seed=2 ** 64 - 1)], str(path))

    lines = path.read_text().splitlines()
    assert lines[0] == "network,mode,fraction,metric,mean,std,nrep,base_seed"
    assert lines[1] == "MN,edges,0.1000,dA,0.333333,0.666667,100,18446744073709551615"


def test_records_sorted(tmp_path):
    """Test rows are ordered by network, metric, fraction."""
    records = [
        record(network="SV", metric="dA", fraction=0.02),
        record(network="MN", metric="simDC", fraction=0.01, mean=0.9),
        record(network="MN", metric="dA", fraction=0.02),
        record(network="MN", metric="dA", fraction=0.01),
    ]
    frame = records_frame(records)

    assert list(zip(frame["network"], frame["metric"], frame["fraction"])) == [
        ("MN", "dA", "0.0100"),
        ("MN", "dA", "0.0200"),
        ("MN", "simDC", "0.0100"),
        ("SV", "dA", "0.0200"),
    ]
    assert sorted_records(records)[0] == records[3]


def test_round_trip(tmp_path):
    """Test reading back what was written."""
    records = [
        record(fraction=0.05, mean=0.123456, std=0.0),
        record(network="JU", metric="simDC", fraction=0.1, mean=0.75, std=0.125, mode="nodes"),
    ]
    path = str(tmp_path / "r.csv")
    write_records(records, path)

    assert read_records(path) == sorted_records(records)


def test_cardinality(tmp_path):
    """Test nine networks by ten fractions by five metrics gives 450 rows."""
    records = [
        record(network=f"N{k}", metric=metric, fraction=round(0.01 * (i + 1), 2))
        for k in range(9)
        for i in range(10)
        for metric in ("dA", "dL", "dNL", "dRootED", "simDC")
    ]
    path = str(tmp_path / "r.csv")
    write_records(records, path)

    assert len(pd.read_csv(path)) == 450


def test_write_records_json(tmp_path):
    """Test the JSON mirror carries the same fields."""
    path = tmp_path / "r.json"
    write_records_json([record(network="SV"), record()], str(path))

    data = json.loads(path.read_text())
    assert [row["network"] for row in data] == ["MN", "SV"]
    assert list(data[0]) == COLUMNS
    assert data[0]["mode"] == "edges"
    assert data[0]["mean"] == 1.5


def test_record_validation():
    """Test negative std is rejected."""
    with pytest.raises(ValueError):
        record(std=-0.1)
