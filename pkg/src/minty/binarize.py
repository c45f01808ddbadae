"""Binarization of raw tabular data into literal matrices.

Continuous columns become pairs of threshold literals at quantile cut points,
categorical columns become one literal per observed category, and columns that
are already 0/1 pass through as a single literal.  A missing raw cell makes
every literal derived from that column missing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import pandas as pd

from .data_model import BinaryDataset

logger = logging.getLogger(__name__)

# values treated as missing on CSV ingestion (case-insensitive)
NA_STRINGS = ("", "na", "nan")


@dataclass(frozen=True)
class ColumnSpec:
    name: str
    kind: str  # "continuous" | "categorical" | "binary"
    thresholds: tuple[float, ...] = ()
    categories: tuple[str, ...] = ()


@dataclass(frozen=True)
class BinarizationSchema:
    columns: tuple[ColumnSpec, ...]

    def literal_defs(self) -> list[tuple[str, str, object]]:
        """(column, op, value) per literal, in emission order."""
        out = []
        for col in self.columns:
            if col.kind == "continuous":
                for t in col.thresholds:
                    out.append((col.name, "<=", t))
                    out.append((col.name, ">=", t))
            elif col.kind == "categorical":
                for cat in col.categories:
                    out.append((col.name, "=", cat))
            else:
                out.append((col.name, "=", 1))
        return out

    def literal_names(self) -> list[str]:
        names = []
        for col, op, val in self.literal_defs():
            if op == "=" and val == 1:
                names.append(col)
            else:
                names.append(f"{col} {op} {val}")
        return names

    def to_dict(self) -> dict:
        return {
            "columns": [
                {
                    "name": c.name,
                    "kind": c.kind,
                    "thresholds": list(c.thresholds),
                    "categories": list(c.categories),
                }
                for c in self.columns
            ]
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "BinarizationSchema":
        return cls(
            columns=tuple(
                ColumnSpec(
                    name=c["name"],
                    kind=c["kind"],
                    thresholds=tuple(c.get("thresholds", ())),
                    categories=tuple(c.get("categories", ())),
                )
                for c in doc["columns"]
            )
        )


def _quantile(sorted_vals: np.ndarray, p: float) -> float:
    """Nearest-rank quantile; the midpoint of adjacent ranks at exact boundaries."""
    m = len(sorted_vals)
    h = p * m
    if h == int(h) and 0 < int(h) < m:
        k = int(h)
        return float((sorted_vals[k - 1] + sorted_vals[k]) / 2)
    k = int(np.ceil(h))
    k = min(max(k, 1), m)
    return float(sorted_vals[k - 1])


def build_schema(
    raw_table: pd.DataFrame, n_bins: int = 4, exclude: Sequence[str] = ()
) -> BinarizationSchema:
    """Derive a binarization schema from observed values.

    Continuous columns get n_bins - 1 quantile thresholds (duplicates
    collapsed), each emitting both a "<=" and a ">=" literal; categorical
    columns emit one literal per observed category.
    """
    if n_bins < 2:
        raise ValueError("n_bins must be >= 2")
    if raw_table.empty:
        raise ValueError("raw table is empty")
    columns = []
    for name in raw_table.columns:
        if name in exclude:
            continue
        series = raw_table[name]
        observed = series.dropna()
        if observed.empty:
            raise ValueError(f"column {name!r} has no observed values")
        numeric = pd.to_numeric(observed, errors="coerce")
        if numeric.notna().all():
            vals = numeric.to_numpy(dtype=np.float64)
            uniq = np.unique(vals)
            if set(uniq.tolist()) <= {0.0, 1.0}:
                columns.append(ColumnSpec(name=name, kind="binary"))
                continue
            sorted_vals = np.sort(vals)
            thresholds = sorted(
                {_quantile(sorted_vals, i / n_bins) for i in range(1, n_bins)}
            )
            if len(uniq) == 1:
                logger.warning("column %r is constant; no thresholds emitted", name)
                thresholds = []
            columns.append(
                ColumnSpec(name=name, kind="continuous", thresholds=tuple(thresholds))
            )
        else:
            cats = tuple(sorted(str(v) for v in observed.unique()))
            columns.append(ColumnSpec(name=name, kind="categorical", categories=cats))
    return BinarizationSchema(columns=tuple(columns))


def apply_schema(
    raw_table: pd.DataFrame, schema: BinarizationSchema, outcome_column: str
) -> BinaryDataset:
    """Evaluate every schema literal on every row and extract the outcome.

    Rows with a missing outcome are dropped (logged with a count).  A missing
    raw cell produces (xbar=0, mask=1) for all of that column's literals.
    """
    if outcome_column not in raw_table.columns:
        raise KeyError(f"outcome column {outcome_column!r} not in table")
    y_raw = pd.to_numeric(raw_table[outcome_column], errors="coerce")
    if y_raw.isna().all() or (raw_table[outcome_column].notna() & y_raw.isna()).any():
        raise ValueError(f"outcome column {outcome_column!r} is not numeric")
    keep = y_raw.notna()
    dropped = int((~keep).sum())
    if dropped:
        logger.warning("dropped %d rows with missing outcome", dropped)
    table = raw_table.loc[keep]
    y = y_raw.loc[keep].to_numpy(dtype=np.float64)
    n = len(table)

    cols_x, cols_m = [], []
    for col in schema.columns:
        if col.name not in table.columns:
            raise KeyError(f"schema column {col.name!r} not in table")
        series = table[col.name]
        missing = series.isna().to_numpy()
        if col.kind == "categorical":
            strs = series.astype("string")
            for cat in col.categories:
                hit = (strs == cat).to_numpy(dtype=bool)
                cols_x.append(np.where(missing, 0, hit.astype(np.int8)))
                cols_m.append(missing.astype(np.int8))
        else:
            vals = pd.to_numeric(series, errors="coerce").to_numpy(dtype=np.float64)
            if col.kind == "binary":
                hit = vals == 1.0
                cols_x.append(np.where(missing, 0, hit.astype(np.int8)))
                cols_m.append(missing.astype(np.int8))
            else:
                for t in col.thresholds:
                    for hit in (vals <= t, vals >= t):
                        cols_x.append(np.where(missing, 0, hit.astype(np.int8)))
                        cols_m.append(missing.astype(np.int8))
    xbar = np.column_stack(cols_x).astype(np.int8) if cols_x else np.zeros((n, 0), np.int8)
    mask = np.column_stack(cols_m).astype(np.int8) if cols_m else np.zeros((n, 0), np.int8)
    return BinaryDataset(
        xbar=xbar, mask=mask, y=y, literal_names=tuple(schema.literal_names())
    )


def read_csv(path) -> pd.DataFrame:
    """CSV ingestion: header row required; empty strings, NA, and NaN
    (case-insensitive) parse as missing."""
    na_values = set()
    for s in NA_STRINGS:
        na_values.update({s, s.upper(), s.capitalize(), "NaN", "Na", "nA", "NAN", "NA"})
    return pd.read_csv(path, na_values=sorted(na_values), keep_default_na=False, skipinitialspace=True)
