"""Command-line interface: fit models from CSV, sweep the reliance penalty,
render scorecards, generate synthetic data, ampute, and run the bound checks.

Exit codes: 0 success, 1 acceptance/bound failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd

from . import __version__
from .binarize import apply_schema, build_schema, read_csv
from .column_generation import fit_minty
from .data_model import BinaryDataset, FitConfig, RuleModel
from .metrics import evaluate
from .missingness import apply_mask, mask_mcar, mask_mar, mask_mnar
from .prop1 import run_default_grid
from .synthdata import PairSpec, gen_pair_mask, gen_replacement_pairs, gen_toy

GRID_LAMBDAS = (1e-3, 1e-2, 1e-1)
GAMMA_CHOICES = (0.0, 1e-7, 1e-3, 0.01, 0.1, 10000.0)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("MINTY_SEED")
    return int(env) if env else 0


def _write_manifest(out_path: str, command: str, config: dict, inputs: list,
                    outputs: list, seed: int, wall_clock: float) -> None:
    manifest = {
        "command": command,
        "config": config,
        "inputs": inputs,
        "outputs": outputs,
        "seed": seed,
        "wall_clock_sec": wall_clock,
        "version": __version__,
    }
    with open(out_path + ".manifest.json", "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2, default=str)
        f.write("\n")


def _split(n: int, frac: float, seed: int) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    cut = int(round(n * (1 - frac)))
    return perm[:cut], perm[cut:]


def _subset(ds: BinaryDataset, idx: np.ndarray) -> BinaryDataset:
    return BinaryDataset(
        xbar=ds.xbar[idx], mask=ds.mask[idx], y=ds.y[idx], literal_names=ds.literal_names
    )


def _config_from_args(args, seed: int, lambda0: float, lambda1: float) -> FitConfig:
    return FitConfig(
        lambda0=lambda0, lambda1=lambda1, gamma=args.gamma, k_max=args.k_max,
        beam_depth=args.beam_depth, solver=args.solver, seed=seed,
    )


def cmd_fit(args) -> int:
    seed = _resolve_seed(args)
    t0 = time.time()
    table = read_csv(args.train_csv)
    schema = build_schema(table, n_bins=args.n_bins, exclude=(args.outcome,))
    ds = apply_schema(table, schema, args.outcome)
    train_idx, test_idx = _split(ds.n, 0.2, seed)
    train, test = _subset(ds, train_idx), _subset(ds, test_idx)

    if args.lambda0 is not None and args.lambda1 is not None:
        lambda0, lambda1 = args.lambda0, args.lambda1
        cfg = _config_from_args(args, seed, lambda0, lambda1)
        model, _ = fit_minty(train, cfg)
    else:
        # validation split of the training portion drives the lambda grid
        fit_idx, val_idx = _split(train.n, 0.2, seed + 1)
        inner, val = _subset(train, fit_idx), _subset(train, val_idx)
        l0_grid = (args.lambda0,) if args.lambda0 is not None else GRID_LAMBDAS
        l1_grid = (args.lambda1,) if args.lambda1 is not None else GRID_LAMBDAS
        best = None
        for l0 in l0_grid:
            for l1 in l1_grid:
                cfg = _config_from_args(args, seed, l0, l1)
                m, _ = fit_minty(inner, cfg)
                rep = evaluate(m, val, bootstrap_reps=100, seed=seed)
                if best is None or rep.mse < best[0]:
                    best = (rep.mse, l0, l1)
        _, lambda0, lambda1 = best
        cfg = _config_from_args(args, seed, lambda0, lambda1)
        model, _ = fit_minty(train, cfg)

    model = RuleModel(
        rules=model.rules, beta=model.beta, literal_names=model.literal_names,
        schema=schema, fit_meta=model.fit_meta,
    )
    model.save(args.out)
    report = evaluate(model, test, seed=seed)
    print(report.format_row(f"minty gamma={args.gamma:g}"))
    _write_manifest(
        args.out, "fit",
        {"lambda0": lambda0, "lambda1": lambda1, "gamma": args.gamma,
         "k_max": args.k_max, "beam_depth": args.beam_depth, "solver": args.solver,
         "n_bins": args.n_bins, "outcome": args.outcome},
        [args.train_csv], [args.out], seed, time.time() - t0,
    )
    return 0


def cmd_sweep_gamma(args) -> int:
    seed = _resolve_seed(args)
    t0 = time.time()
    table = read_csv(args.train_csv)
    schema = build_schema(table, n_bins=args.n_bins, exclude=(args.outcome,))
    ds = apply_schema(table, schema, args.outcome)
    train_idx, test_idx = _split(ds.n, 0.2, seed)
    train, test = _subset(ds, train_idx), _subset(ds, test_idx)

    if args.gammas:
        gammas = [float(g) for g in args.gammas.split(",")]
    else:
        gammas = list(np.logspace(np.log10(args.gamma_min), np.log10(args.gamma_max), args.gamma_count))

    def one(gamma: float):
        cfg = FitConfig(
            lambda0=args.lambda0 if args.lambda0 is not None else 0.01,
            lambda1=args.lambda1 if args.lambda1 is not None else 0.01,
            gamma=gamma, k_max=args.k_max, beam_depth=args.beam_depth,
            solver=args.solver, seed=seed,
        )
        model, _ = fit_minty(train, cfg)
        rep = evaluate(model, test, seed=seed)
        return {"gamma": gamma, "r2": rep.r2, "mse": rep.mse, "rho_bar": rep.rho_bar}

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(one, gammas))
    else:
        rows = [one(g) for g in gammas]
    pd.DataFrame(rows).to_csv(args.out, index=False)
    _write_manifest(
        args.out, "sweep-gamma",
        {"gammas": gammas, "outcome": args.outcome, "n_bins": args.n_bins},
        [args.train_csv], [args.out], seed, time.time() - t0,
    )
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def render_scorecard(model: RuleModel) -> str:
    """Plain-text scorecard: one line per rule with its signed coefficient,
    intercept last, in first-added order."""
    names = model.literal_names
    entries = []
    for rule, b in zip(model.rules[1:], model.beta[1:]):
        label = rule.name(names) if names else " OR ".join(str(j) for j in rule.literals)
        entries.append((label, b))
    entries.append(("Intercept", model.intercept))
    width = max(len(label) for label, _ in entries) + 3
    return "\n".join(f"{label:<{width}}{b:+.2f}" for label, b in entries)


def cmd_scorecard(args) -> int:
    model = RuleModel.load(args.model)
    print(render_scorecard(model))
    return 0


def _dump_csv(xbar: np.ndarray, mask: np.ndarray, y: np.ndarray,
              names: list[str], path: str) -> None:
    """Write literals + outcome; masked cells become empty strings."""
    cells = xbar.astype(object)
    cells[mask == 1] = ""
    df = pd.DataFrame(cells, columns=names)
    df["y"] = y
    df.to_csv(path, index=False)


def cmd_synth(args) -> int:
    seed = _resolve_seed(args)
    t0 = time.time()
    if args.preset == "sec4":
        args.kind, args.n, args.c = "pairs", 5000, 30
    elif args.preset == "appendix":
        args.kind, args.n = "toy", 7000

    if args.kind == "toy":
        ds = gen_toy(args.n, args.q, seed)
        _dump_csv(ds.xbar, ds.mask, ds.y, list(ds.literal_names), args.out)
    else:
        spec = PairSpec(n=args.n, c=args.c, delta=args.delta, sigma=args.sigma, seed=seed)
        X, y = gen_replacement_pairs(spec)
        mask = gen_pair_mask(X, args.q, seed + 1)
        names = [f"Base {i + 1}" for i in range(args.c)] + [f"Repl {i + 1}" for i in range(args.c)]
        _dump_csv(apply_mask(X, mask), mask, y, names, args.out)
    _write_manifest(
        args.out, "synth",
        {"kind": args.kind, "n": args.n, "c": getattr(args, "c", None),
         "delta": args.delta, "sigma": args.sigma, "q": args.q, "preset": args.preset},
        [], [args.out], seed, time.time() - t0,
    )
    print(f"wrote {args.out}")
    return 0


def cmd_mask(args) -> int:
    seed = _resolve_seed(args)
    t0 = time.time()
    table = read_csv(args.input_csv)
    feature_cols = [c for c in table.columns if c != args.outcome]
    X = table[feature_cols].to_numpy(dtype=np.float64).astype(np.int8)
    if args.mechanism == "mcar":
        mask = mask_mcar(X, args.q, seed)
    elif args.mechanism == "mar":
        mask = mask_mar(X, args.q, args.pivot_count, seed)
    elif args.mechanism == "mnar":
        mask = mask_mnar(X, args.q, seed)
    else:
        mask = gen_pair_mask(X, args.q, seed)
    y = table[args.outcome].to_numpy(dtype=np.float64) if args.outcome in table.columns else None
    cells = apply_mask(X, mask).astype(object)
    cells[mask == 1] = ""
    df = pd.DataFrame(cells, columns=feature_cols)
    if y is not None:
        df[args.outcome] = y
    df.to_csv(args.out, index=False)
    _write_manifest(
        args.out, "mask", {"mechanism": args.mechanism, "q": args.q},
        [args.input_csv], [args.out], seed, time.time() - t0,
    )
    print(f"wrote {args.out}")
    return 0


def cmd_prop1(args) -> int:
    seed = _resolve_seed(args)
    t0 = time.time()
    reports = run_default_grid(c=args.c, sigma=args.sigma, mc_samples=args.mc_samples, seed=seed)
    all_ok = True
    for rep in reports:
        for name, ok in (("upper", rep.upper_bound_holds), ("lower", rep.lower_bound_holds)):
            status = "PASS" if ok else "FAIL"
            all_ok = all_ok and ok
            print(
                f"{status} {name}-bound delta={rep.delta:<5g} q={rep.q:<4g} "
                f"threshold={rep.threshold:.4f}"
            )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            json.dump([r.to_dict() for r in reports], f, indent=2)
            f.write("\n")
        _write_manifest(
            args.out, "prop1",
            {"c": args.c, "sigma": args.sigma, "mc_samples": args.mc_samples},
            [], [args.out], seed, time.time() - t0,
        )
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minty", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common_fit_flags(p):
        p.add_argument("--outcome", required=True)
        p.add_argument("--lambda0", type=float, default=None)
        p.add_argument("--lambda1", type=float, default=None)
        p.add_argument("--gamma", type=float, default=0.0)
        p.add_argument("--k-max", type=int, default=10)
        p.add_argument("--beam-depth", type=int, default=7)
        p.add_argument("--solver", choices=["beam", "exact"], default="beam")
        p.add_argument("--n-bins", type=int, default=4)
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("fit", help="fit a rule model from a CSV file")
    p.add_argument("train_csv")
    common_fit_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("sweep-gamma", help="fit and evaluate across a gamma grid")
    p.add_argument("train_csv")
    common_fit_flags(p)
    p.add_argument("--gammas", default=None, help="comma-separated gamma values")
    p.add_argument("--gamma-min", type=float, default=1e-6)
    p.add_argument("--gamma-max", type=float, default=1e3)
    p.add_argument("--gamma-count", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep_gamma)

    p = sub.add_parser("scorecard", help="render a model file as a scorecard")
    p.add_argument("model")
    p.set_defaults(func=cmd_scorecard)

    p = sub.add_parser("synth", help="generate synthetic datasets")
    p.add_argument("--kind", choices=["pairs", "toy"], default="pairs")
    p.add_argument("--preset", choices=["sec4", "appendix"], default=None)
    p.add_argument("--n", type=int, default=5000)
    p.add_argument("--c", type=int, default=30)
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--q", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("mask", help="ampute a complete CSV dataset")
    p.add_argument("input_csv")
    p.add_argument("--mechanism", choices=["mcar", "mar", "mnar", "pair"], default="mcar")
    p.add_argument("--q", type=float, default=0.1)
    p.add_argument("--pivot-count", type=int, default=1)
    p.add_argument("--outcome", default="y")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_mask)

    p = sub.add_parser("prop1", help="run the risk-bound grid and report pass/fail")
    p.add_argument("--c", type=int, default=4)
    p.add_argument("--sigma", type=float, default=0.5)
    p.add_argument("--mc-samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_prop1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (KeyError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
