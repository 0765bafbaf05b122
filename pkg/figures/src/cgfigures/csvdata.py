"""Loader for the cgmeas CSV files (header comments + header row + data)."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class CsvFormatError(ValueError):
    """The CSV file does not match the expected sweep schema."""


@dataclass
class SweepData:
    path: Path
    params: dict[str, str]         # from '# key=value' comment lines
    columns: dict[str, np.ndarray]

    @property
    def n_list(self) -> list[int]:
        seen: list[int] = []
        for value in self.columns["N"]:
            n = int(value)
            if n not in seen:
                seen.append(n)
        return seen

    def column(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise CsvFormatError(f"{self.path}: missing column {name!r}")
        return self.columns[name]

    def series(self, n: int, x_name: str, y_name: str) -> tuple[np.ndarray, np.ndarray]:
        mask = self.columns["N"].astype(int) == n
        return self.column(x_name)[mask], self.column(y_name)[mask]

    @property
    def sweep_variable(self) -> str:
        return self.params.get("sweep_variable", "theta")


def load_sweep(path: str | Path) -> SweepData:
    path = Path(path)
    params: dict[str, str] = {}
    header: list[str] | None = None
    rows: list[list[str]] = []
    with path.open(newline="") as fh:
        for record in csv.reader(fh):
            if not record:
                continue
            if record[0].startswith("#"):
                text = ",".join(record).lstrip("#").strip()
                if "=" in text:
                    key, _, value = text.partition("=")
                    params[key.strip()] = value.strip()
                continue
            if header is None:
                header = record
            else:
                rows.append(record)
    if header is None:
        raise CsvFormatError(f"{path}: no header row found")
    if not rows:
        raise CsvFormatError(f"{path}: no data rows below header {header}")
    if "N" not in header:
        raise CsvFormatError(f"{path}: missing column 'N'")
    data = np.array(rows, dtype=float)
    if data.shape[1] != len(header):
        raise CsvFormatError(f"{path}: ragged rows do not match header {header}")
    columns = {name: data[:, i] for i, name in enumerate(header)}
    return SweepData(path=path, params=params, columns=columns)
