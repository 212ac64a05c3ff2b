"""
Deterministic, atomic output files.
"""

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd


@dataclass
class Table:
    """Rows ready to be written as CSV or JSON."""
    columns: List[str]
    rows: List[Dict[str, Any]]
    integer_columns: Sequence[str] = ()
    payload: Optional[Any] = field(default=None)  # JSON document replacing the flat rows

    def to_csv(self) -> str:
        frame = pd.DataFrame(self.rows, columns=self.columns)
        for column in self.integer_columns:
            frame[column] = frame[column].astype("Int64")
        return frame.to_csv(index=False, lineterminator="\n")

    def to_json(self) -> str:
        document = self.payload if self.payload is not None else [
            {column: row.get(column) for column in self.columns} for row in self.rows
        ]
        return json.dumps(document, indent=2, allow_nan=False) + "\n"


def atomic_write(path: Path, text: str) -> None:
    """Write text to a temporary file next to path, then rename it into place."""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    handle = tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", newline="", dir=directory, prefix=f".{path.name}.", suffix=".tmp", delete=False
    )
    try:
        with handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(handle.name, path)
    except BaseException:
        Path(handle.name).unlink(missing_ok=True)
        raise


def write_table(table: Table, path: Path, emit: str) -> None:
    atomic_write(path, table.to_json() if emit == "json" else table.to_csv())
