"""minty: sparse disjunctive rule models that learn to avoid relying on
features with missing values, with the simulators and metrics used to verify
their behavior."""

__version__ = "0.1.0"

from .activation import ActivationResult, activation_matrix, eval_rule_trivalued
from .binarize import BinarizationSchema, apply_schema, build_schema, read_csv
from .column_generation import FitTrace, fit_minty, predict, predict_dataset
from .data_model import (
    BinaryDataset,
    DatasetError,
    FitConfig,
    Rule,
    RuleModel,
    TriValue,
    validate_dataset,
)
from .metrics import EvalReport, evaluate, reliance_linear
from .missingness import apply_mask, mask_mar, mask_mcar, mask_mnar
from .prop1 import Prop1Report, run_default_grid, run_prop1_experiment
from .rulegen import (
    PricingResult,
    SearchSpaceTooLarge,
    beam_search_pricing,
    exhaustive_pricing,
    rule_objective,
)
from .synthdata import PairSpec, gen_pair_mask, gen_replacement_pairs, gen_toy, pair_dataset
from .weighted_lasso import fit_weighted_lasso, predict_linear, soft_threshold

__all__ = [
    "ActivationResult",
    "BinarizationSchema",
    "BinaryDataset",
    "DatasetError",
    "EvalReport",
    "FitConfig",
    "FitTrace",
    "PairSpec",
    "PricingResult",
    "Prop1Report",
    "Rule",
    "RuleModel",
    "SearchSpaceTooLarge",
    "TriValue",
    "activation_matrix",
    "apply_mask",
    "apply_schema",
    "beam_search_pricing",
    "build_schema",
    "eval_rule_trivalued",
    "evaluate",
    "exhaustive_pricing",
    "fit_minty",
    "fit_weighted_lasso",
    "gen_pair_mask",
    "gen_replacement_pairs",
    "gen_toy",
    "mask_mar",
    "mask_mcar",
    "mask_mnar",
    "pair_dataset",
    "predict",
    "predict_dataset",
    "predict_linear",
    "read_csv",
    "reliance_linear",
    "rule_objective",
    "run_default_grid",
    "run_prop1_experiment",
    "soft_threshold",
    "validate_dataset",
]
