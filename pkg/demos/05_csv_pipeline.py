"""End-to-end tabular pipeline: raw CSV -> binarized literals -> rule model.

Builds a mixed-type table with missing cells, learns quantile thresholds and
one-hot categories, fits a rule model, and reports bootstrap confidence
intervals.  The binarization schema travels inside the saved model file so a
scorecard can be applied to new raw rows later.
"""

import tempfile
from pathlib import Path

import numpy as np
import pandas as pd

from minty import FitConfig, RuleModel, apply_schema, build_schema, evaluate, fit_minty

rng = np.random.default_rng(0)
n = 3000
age = rng.normal(60, 12, n)
score = rng.normal(25, 4, n)
group = rng.choice(["a", "b", "c"], n)
y = 2.0 * (score <= 24) + 1.0 * (group == "c") + rng.normal(0, 0.5, n)
df = pd.DataFrame({"age": age, "score": score, "group": group, "y": y})
df.loc[rng.random(n) < 0.15, "score"] = np.nan  # ampute the key predictor

schema = build_schema(df, n_bins=4, exclude=("y",))
ds = apply_schema(df, schema, outcome_column="y")
print(f"binarized {df.shape[1] - 1} raw columns into {ds.d} literals:")
print("  " + ", ".join(ds.literal_names[:6]) + ", ...")

model, _ = fit_minty(ds, FitConfig(lambda0=0.01, lambda1=0.01, gamma=0.01))
rep = evaluate(model, ds)
print(f"\n{'model':<12}{'R2 (95% CI)':^22}{'MSE (95% CI)':^22}{'rho':>5}")
print(rep.format_row("rule model"))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "model.json"
    RuleModel(rules=model.rules, beta=model.beta,
              literal_names=model.literal_names, schema=schema).save(path)
    again = RuleModel.load(path)
    print(f"\nmodel round-tripped through {path.name}; "
          f"schema carries {len(again.schema.columns)} column specs.")
