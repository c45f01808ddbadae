"""The learning loop: alternate master-problem refits with pricing until no
rule with negative reduced cost remains or the rule budget is exhausted."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .activation import activation_matrix, eval_rule_trivalued
from .data_model import BinaryDataset, FitConfig, Rule, RuleModel, TriValue, validate_dataset
from .rulegen import beam_search_pricing, exhaustive_pricing
from .weighted_lasso import fit_weighted_lasso

DROP_THRESHOLD = 1e-10


@dataclass
class TraceStep:
    rule: Rule
    delta: float
    sign: int
    master_objective: float
    n_nonzero: int


@dataclass
class FitTrace:
    steps: list[TraceStep] = field(default_factory=list)
    termination: str = ""
    rules: tuple[Rule, ...] = ()
    beta: np.ndarray | None = None
    converged: bool = True


def fit_minty(ds: BinaryDataset, cfg: FitConfig) -> tuple[RuleModel, FitTrace]:
    """Column-generation fit of a disjunctive rule model.

    Starts from the intercept-only rule set; each iteration refits the
    weighted lasso (weight gamma * rho_bar_k + lambda0 + lambda1 * |rule|,
    intercept unpenalized), forms the residual, and prices a new rule.  Stops
    when the pricing objective is nonnegative or k_max rules were appended,
    then refits once more.  Rules whose final coefficient is below the drop
    threshold are removed from the returned model but kept in the trace.
    """
    validate_dataset(ds)
    if ds.n < 2:
        raise ValueError("need at least 2 samples to fit")

    rules: list[Rule] = [Rule(())]
    weights = [0.0]  # intercept is never penalized
    A = np.ones((ds.n, 1), dtype=np.float64)
    width = cfg.beam_width if cfg.beam_width is not None else ds.d
    trace = FitTrace()
    beta = np.zeros(1)

    for _ in range(cfg.k_max):
        res = fit_weighted_lasso(
            A, ds.y, np.array(weights), cd_tol=cfg.cd_tol, cd_max_iter=cfg.cd_max_iter, beta0=beta
        )
        beta = res.beta
        trace.converged = trace.converged and res.converged
        residual = A @ beta - ds.y

        exclude = frozenset(r.literals for r in rules[1:])
        if cfg.solver == "beam":
            priced = beam_search_pricing(
                residual, ds, cfg.gamma, cfg.lambda0, cfg.lambda1, width, cfg.beam_depth, exclude
            )
        else:
            priced = exhaustive_pricing(
                residual, ds, cfg.gamma, cfg.lambda0, cfg.lambda1, cfg.beam_depth, exclude
            )

        if priced.objective >= 0:
            trace.termination = "optimal"
            trace.steps.append(
                TraceStep(priced.rule, priced.objective, priced.sign, res.objective,
                          int(np.count_nonzero(beta)))
            )
            break

        rules.append(priced.rule)
        rho_bar = float(priced.rho.mean())
        weights.append(cfg.gamma * rho_bar + cfg.lambda0 + cfg.lambda1 * len(priced.rule))
        A = np.column_stack([A, priced.a.astype(np.float64)])
        beta = np.append(beta, 0.0)
        trace.steps.append(
            TraceStep(priced.rule, priced.objective, priced.sign, res.objective,
                      int(np.count_nonzero(beta)))
        )
    else:
        trace.termination = "k_max"

    final = fit_weighted_lasso(
        A, ds.y, np.array(weights), cd_tol=cfg.cd_tol, cd_max_iter=cfg.cd_max_iter, beta0=beta
    )
    trace.converged = trace.converged and final.converged
    trace.rules = tuple(rules)
    trace.beta = final.beta

    keep = [0] + [k for k in range(1, len(rules)) if abs(final.beta[k]) >= DROP_THRESHOLD]
    model = RuleModel(
        rules=tuple(rules[k] for k in keep),
        beta=final.beta[keep],
        literal_names=ds.literal_names,
        fit_meta={
            "config": cfg,
            "termination": trace.termination or "no-candidate",
            "master_objective": final.objective,
            "converged": trace.converged,
            "n_rules_priced": len(rules) - 1,
        },
    )
    return model, trace


def predict(model: RuleModel, x_row, m_row) -> tuple[float, bool]:
    """Score one observation row; also report whether any nonzero-coefficient
    rule had an NA activation (reliance on features with missing values)."""
    x_row = np.asarray(x_row)
    m_row = np.asarray(m_row)
    if x_row.shape != m_row.shape:
        raise ValueError(f"dimension mismatch: {x_row.shape} vs {m_row.shape}")
    yhat = 0.0
    relied = False
    for rule, b in zip(model.rules, model.beta):
        tv = eval_rule_trivalued(rule, x_row, m_row)
        if tv is TriValue.TRUE:
            yhat += b
        elif tv is TriValue.NA and b != 0.0:
            relied = True  # NA contributes 0 to the score
    return yhat, relied


def predict_dataset(model: RuleModel, ds: BinaryDataset) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized predict over a dataset: (yhat vector, relied boolean vector)."""
    act = activation_matrix(ds, model.rules)
    yhat = act.a.astype(np.float64) @ model.beta
    nonzero = model.beta != 0.0
    relied = (act.rho[:, nonzero] == 1).any(axis=1)
    return yhat, relied
