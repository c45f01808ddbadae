"""Core domain types: datasets, rules, fitted models, and fit configuration.

All types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import Optional, Sequence

import numpy as np

MODEL_FILE_VERSION = 1


class TriValue(Enum):
    """Three-valued truth: a rule under missingness is True, False, or NA."""

    TRUE = "true"
    FALSE = "false"
    NA = "na"

    def __bool__(self):
        raise TypeError("TriValue does not coerce to bool; compare explicitly")


class DatasetError(ValueError):
    """Raised when a BinaryDataset violates its invariants."""


@dataclass(frozen=True)
class BinaryDataset:
    """Zero-imputed binary literal matrix with missingness mask and outcome.

    xbar[i, j] is the zero-imputed literal value: 1 only if literal j is
    observed and true for row i.  mask[i, j] = 1 marks a missing cell, which
    forces xbar[i, j] = 0.
    """

    xbar: np.ndarray
    mask: np.ndarray
    y: np.ndarray
    literal_names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "xbar", np.asarray(self.xbar, dtype=np.int8))
        object.__setattr__(self, "mask", np.asarray(self.mask, dtype=np.int8))
        object.__setattr__(self, "y", np.asarray(self.y, dtype=np.float64))
        if not self.literal_names:
            object.__setattr__(
                self,
                "literal_names",
                tuple(f"x{j}" for j in range(self.xbar.shape[1])),
            )
        else:
            object.__setattr__(self, "literal_names", tuple(self.literal_names))

    @property
    def n(self) -> int:
        return self.xbar.shape[0]

    @property
    def d(self) -> int:
        return self.xbar.shape[1]


def validate_dataset(ds: BinaryDataset) -> None:
    """Check all BinaryDataset invariants, raising DatasetError on the first violation."""
    xbar, mask, y = ds.xbar, ds.mask, ds.y
    if xbar.ndim != 2 or mask.ndim != 2:
        raise DatasetError("xbar and mask must be 2-dimensional")
    if xbar.shape != mask.shape:
        raise DatasetError(
            f"dimension mismatch: xbar has shape {xbar.shape}, mask has shape {mask.shape}"
        )
    if y.shape != (xbar.shape[0],):
        raise DatasetError(
            f"dimension mismatch: y has length {y.shape[0] if y.ndim == 1 else y.shape}, "
            f"expected {xbar.shape[0]}"
        )
    if len(ds.literal_names) != xbar.shape[1]:
        raise DatasetError(
            f"dimension mismatch: {len(ds.literal_names)} literal names for {xbar.shape[1]} columns"
        )
    for name, arr in (("xbar", xbar), ("mask", mask)):
        bad = (arr != 0) & (arr != 1)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            raise DatasetError(
                f"value-domain error: {name}[{i}][{j}] = {arr[i, j]} is not in {{0, 1}}"
            )
    clash = (mask == 1) & (xbar == 1)
    if clash.any():
        i, j = np.argwhere(clash)[0]
        raise DatasetError(
            f"consistency error at ({i}, {j}): mask=1 requires xbar=0 (zero imputation)"
        )


@dataclass(frozen=True)
class Rule:
    """A disjunction over literal indices.  The empty rule is the intercept,
    which is always true."""

    literals: tuple[int, ...] = ()

    def __post_init__(self):
        lits = tuple(sorted(set(int(j) for j in self.literals)))
        if any(j < 0 for j in lits):
            raise ValueError(f"negative literal index in {lits}")
        object.__setattr__(self, "literals", lits)

    @property
    def is_intercept(self) -> bool:
        return len(self.literals) == 0

    def __len__(self) -> int:
        return len(self.literals)

    def name(self, literal_names: Sequence[str]) -> str:
        if self.is_intercept:
            return "Intercept"
        return " OR ".join(literal_names[j] for j in self.literals)


@dataclass(frozen=True)
class FitConfig:
    """Hyperparameters of the learning loop and its inner solvers."""

    lambda0: float = 0.01
    lambda1: float = 0.01
    gamma: float = 0.0
    k_max: int = 10
    beam_width: Optional[int] = None  # None = "auto": width equals literal count
    beam_depth: int = 7
    solver: str = "beam"  # "beam" or "exact"
    cd_tol: float = 1e-8
    cd_max_iter: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if min(self.lambda0, self.lambda1, self.gamma) < 0:
            raise ValueError("penalties must be nonnegative")
        if self.k_max < 1:
            raise ValueError("k_max must be >= 1")
        if self.beam_depth < 1:
            raise ValueError("beam_depth must be >= 1")
        if self.beam_width is not None and self.beam_width < 1:
            raise ValueError("beam_width must be >= 1 or None for auto")
        if self.solver not in ("beam", "exact"):
            raise ValueError(f"unknown solver {self.solver!r}")


@dataclass(frozen=True)
class RuleModel:
    """An ordered rule set with coefficients.  rules[0] is the intercept.

    schema, when present, carries the binarization needed to score raw rows;
    fit_meta records the configuration and diagnostics of the fit.
    """

    rules: tuple[Rule, ...]
    beta: np.ndarray
    literal_names: tuple[str, ...] = ()
    schema: Optional[object] = None  # BinarizationSchema; kept loose to avoid a cycle
    fit_meta: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "beta", np.asarray(self.beta, dtype=np.float64))
        object.__setattr__(self, "literal_names", tuple(self.literal_names))
        if len(self.rules) != len(self.beta):
            raise ValueError(
                f"{len(self.rules)} rules but {len(self.beta)} coefficients"
            )
        if not self.rules or not self.rules[0].is_intercept:
            raise ValueError("rules[0] must be the intercept")

    @property
    def intercept(self) -> float:
        return float(self.beta[0])

    def to_dict(self) -> dict:
        from .binarize import BinarizationSchema  # local import: avoid cycle

        schema = None
        if self.schema is not None:
            schema = self.schema.to_dict() if isinstance(self.schema, BinarizationSchema) else self.schema
        return {
            "version": MODEL_FILE_VERSION,
            "literal_names": list(self.literal_names),
            "rules": [list(r.literals) for r in self.rules],
            "beta": [float(b) for b in self.beta],
            "intercept_index": 0,
            "schema": schema,
            "fit_meta": _jsonable(self.fit_meta),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "RuleModel":
        from .binarize import BinarizationSchema

        schema = doc.get("schema")
        if schema is not None:
            schema = BinarizationSchema.from_dict(schema)
        return cls(
            rules=tuple(Rule(tuple(lits)) for lits in doc["rules"]),
            beta=np.array(doc["beta"], dtype=np.float64),
            literal_names=tuple(doc.get("literal_names", ())),
            schema=schema,
            fit_meta=doc.get("fit_meta", {}),
        )

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2)
            f.write("\n")

    @classmethod
    def load(cls, path) -> "RuleModel":
        with open(path, "r", encoding="utf-8") as f:
            return cls.from_dict(json.load(f))


def _jsonable(obj):
    """Coerce numpy scalars/arrays inside nested dicts into plain python."""
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, FitConfig):
        return asdict(obj)
    return obj
