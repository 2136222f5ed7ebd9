"""
Persistence of experiment records as CSV (with an optional JSON mirror).
"""
import logging
from typing import List, Sequence

import pandas as pd
from pydantic import TypeAdapter

from src.schemas import ExperimentRecord
from src.utils.formatting import fixed, significant

logger = logging.getLogger(__name__)

COLUMNS = ["network", "mode", "fraction", "metric", "mean", "std", "nrep", "base_seed"]

_records_adapter = TypeAdapter(List[ExperimentRecord])


def sorted_records(records: Sequence[ExperimentRecord]) -> List[ExperimentRecord]:
    """Records ordered by (network, metric, fraction)."""
    return sorted(records, key=lambda r: (r.network, r.metric.value, r.fraction))


def records_frame(records: Sequence[ExperimentRecord]) -> pd.DataFrame:
    """Rendered records: fraction with 4 decimals, statistics with 6 significant digits."""
    rows = [
        {
            "network": r.network,
            "mode": r.mode.value,
            "fraction": fixed(r.fraction, 4),
            "metric": r.metric.value,
            "mean": significant(r.mean, 6),
            "std": significant(r.std, 6),
            "nrep": str(r.nrep),
            "base_seed": str(r.base_seed),
        }
        for r in sorted_records(records)
    ]
    return pd.DataFrame(rows, columns=COLUMNS)


def write_records(records: Sequence[ExperimentRecord], path: str) -> None:
    """
    Write records as CSV with header ``network,mode,fraction,metric,mean,std,nrep,base_seed``.

    Raises:
        OSError: If the file cannot be written
    """
    records_frame(records).to_csv(path, index=False, lineterminator="\n")
    logger.info(f"Wrote {len(records)} records to {path}")


def read_records(path: str) -> List[ExperimentRecord]:
    """Read a CSV written by ``write_records``."""
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    return [
        ExperimentRecord(
            network=row["network"],
            mode=row["mode"],
            fraction=float(row["fraction"]),
            metric=row["metric"],
            mean=float(row["mean"]),
            std=float(row["std"]),
            nrep=int(row["nrep"]),
            base_seed=int(row["base_seed"]),
        )
        for row in frame.to_dict("records")
    ]


def write_records_json(records: Sequence[ExperimentRecord], path: str) -> None:
    """JSON mirror of the CSV: a list of objects with the same fields and order."""
    with open(path, "wb") as f:
        f.write(_records_adapter.dump_json(sorted_records(records), indent=2))
    logger.info(f"Wrote {len(records)} records to {path}")
