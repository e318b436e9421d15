"""
Bound terms of the overfitting counterexample next to a simulation of the
algorithm that produces them.
"""
import math
import logging

import pandas as pd
from scipy.stats import binomtest

from macbound.scenario import (params_from_n, rhs_bound, rhs_final_constant,
                               overfit_gap_lower,
                               instantaneous_divergence_upper, mc_simulate)
from .grid import resolve_grid
from .writer import ConsistencyCheck, ExperimentResult, write_result


DEFAULT_GRID = [16, 64, 100, 256, 1024, 4096]
BLOCK_SIZES = [1, 2, 4]
CONFIDENCE_LEVEL = .999
COLUMNS = ["n", "m", "K", "alpha", "phi", "region_count", "lambda",
           "rhs_bound", "rhs_final_constant", "sqrt_n_rhs_bound",
           "overfit_gap_lower", "instantaneous_divergence_upper", "trials",
           "overfit_trials", "overfit_frequency", "phi_ci_low",
           "phi_ci_high", "conditional_gap_min", "conditional_gap_mean",
           "gen_mean", "gap_violations"]


def _nan_if_none(value):
    return math.nan if value is None else value

def counterexample_row(config, n, m):
    params = params_from_n(n, m)
    rhs = rhs_bound(params)
    report = mc_simulate(params, config.trials, (config.seed, n, m),
                         workers=config.workers)
    ci = binomtest(report.overfit_trials, report.trials).proportion_ci(
        confidence_level=CONFIDENCE_LEVEL, method="exact")
    return {"n": n, "m": m, "K": params.K, "alpha": params.alpha,
            "phi": params.phi, "region_count": params.region_count,
            "lambda": params.lam, "rhs_bound": rhs,
            "rhs_final_constant": rhs_final_constant(n, m),
            "sqrt_n_rhs_bound": math.sqrt(n) * rhs,
            "overfit_gap_lower": overfit_gap_lower(n, m),
            "instantaneous_divergence_upper":
                instantaneous_divergence_upper(n, m),
            "trials": report.trials,
            "overfit_trials": report.overfit_trials,
            "overfit_frequency": report.overfit_frequency,
            "phi_ci_low": ci.low, "phi_ci_high": ci.high,
            "conditional_gap_min": _nan_if_none(report.conditional_gap_min),
            "conditional_gap_mean":
                _nan_if_none(report.conditional_gap_mean),
            "gen_mean": report.gen_mean,
            "gap_violations": report.gap_violations}

def counterexample_checks(rows):
    checks = []
    for row in rows.to_dict("records"):
        key = "n={} m={}".format(row["n"], row["m"])
        checks.append(ConsistencyCheck(
            key + " sqrt(n) rhs <= final constant",
            row["sqrt_n_rhs_bound"] <= row["rhs_final_constant"],
            "{:.6g} vs {:.6g}".format(
                row["sqrt_n_rhs_bound"], row["rhs_final_constant"])))
        checks.append(ConsistencyCheck(
            key + " phi inside the overfit frequency interval",
            row["phi_ci_low"] <= row["phi"] <= row["phi_ci_high"],
            "phi={:.6g} ci=[{:.6g}, {:.6g}]".format(
                row["phi"], row["phi_ci_low"], row["phi_ci_high"])))
        checks.append(ConsistencyCheck(
            key + " every overfit gap above the lower bound",
            row["gap_violations"] == 0,
            "{} violation(s)".format(row["gap_violations"])))
    return checks

def run_counterexample(config):
    grid = resolve_grid(config, DEFAULT_GRID)
    cells = [(n, m) for n in grid for m in BLOCK_SIZES
             if n % m == 0 and 2 * m <= n]
    logging.info(" counterexample: {} (n, m) cells, {} trials each.".format(
        len(cells), config.trials))
    rows = pd.DataFrame([counterexample_row(config, n, m) for n, m in cells],
                        columns=COLUMNS)
    result = ExperimentResult(
        config, rows,
        header={"grid": grid, "block_sizes": BLOCK_SIZES,
                "confidence_level": CONFIDENCE_LEVEL},
        checks=counterexample_checks(rows))
    write_result(result)
    return result
