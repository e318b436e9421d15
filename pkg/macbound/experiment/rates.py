"""
Predicted generalization rate exponents, and slopes fitted to the Gaussian
example bound where the divergence growth exponent is 1.
"""
import math
import logging

import pandas as pd

from macbound.errors import DomainError
from macbound.rates import (GAUSSIAN_EXAMPLE_ASSUMPTION, gen_rate_exponent,
                            optimal_alpha, optimal_gen_rate,
                            empirical_rate_fit)
from macbound.scenario import GaussianScenario, example_gen_bound
from .grid import largest_divisor_at_most, resolve_grid
from .writer import ConsistencyCheck, ExperimentResult, write_result


DEFAULT_GRID = [2 ** k for k in range(6, 13)]
ALPHAS = [0., .5, 1.]
GAMMAS = [0., .5, 1., 1.5, 2.]
SLOPE_TOLERANCE = .05
COLUMNS = ["kind", "gamma", "alpha", "predicted_exponent", "optimal_alpha",
           "optimal_exponent", "fitted_slope", "intercept", "r_squared",
           "num_points"]


def block_size(n, alpha):
    """m ~ n^alpha, rounded down to a divisor of n; alpha = 1 means n / 2."""
    if alpha == 1:
        return largest_divisor_at_most(n, n // 2)
    return largest_divisor_at_most(n, max(1, math.floor(n ** alpha)))

def fit_row(grid, alpha):
    gamma = GAUSSIAN_EXAMPLE_ASSUMPTION.gamma
    points = []
    for n in grid:
        sc = GaussianScenario(.5, n, block_size(n, alpha))
        points.append((n, example_gen_bound(sc)))
    slope, intercept, r_squared = empirical_rate_fit(points)
    best = optimal_gen_rate(gamma)
    return {"kind": "fit", "gamma": gamma, "alpha": alpha,
            "predicted_exponent": gen_rate_exponent(gamma, alpha).exponent,
            "optimal_alpha": best.alpha_used,
            "optimal_exponent": best.exponent, "fitted_slope": slope,
            "intercept": intercept, "r_squared": r_squared,
            "num_points": len(points)}

def table_row(gamma, alpha):
    best = optimal_gen_rate(gamma)
    return {"kind": "table", "gamma": gamma, "alpha": alpha,
            "predicted_exponent": gen_rate_exponent(gamma, alpha).exponent,
            "optimal_alpha": optimal_alpha(gamma),
            "optimal_exponent": best.exponent, "fitted_slope": math.nan,
            "intercept": math.nan, "r_squared": math.nan, "num_points": 0}

def rates_checks(rows):
    checks = []
    for row in rows.to_dict("records"):
        if row["kind"] == "fit":
            checks.append(ConsistencyCheck(
                "alpha={} fitted slope matches gamma=1 exponent".format(
                    row["alpha"]),
                abs(row["fitted_slope"] - row["predicted_exponent"])
                <= SLOPE_TOLERANCE,
                "fitted={:.6g} predicted={:.6g}".format(
                    row["fitted_slope"], row["predicted_exponent"])))
        else:
            expected = (min(row["gamma"] - 1., 0.) - 1.) / 2.
            checks.append(ConsistencyCheck(
                "gamma={} alpha={} optimal exponent".format(
                    row["gamma"], row["alpha"]),
                abs(row["optimal_exponent"] - expected) <= 1e-12))
    return checks

def run_rates(config):
    grid = resolve_grid(config, DEFAULT_GRID)
    if len(grid) < 3:
        raise DomainError(
            "rates needs at least 3 values of n, got {}".format(grid))
    logging.info(" rates: fitting on n in {}.".format(grid))
    records = [fit_row(grid, alpha) for alpha in ALPHAS]
    records.extend(table_row(gamma, alpha)
                   for gamma in GAMMAS for alpha in ALPHAS)
    rows = pd.DataFrame(records, columns=COLUMNS)
    result = ExperimentResult(
        config, rows,
        header={"grid": grid, "alphas": ALPHAS, "gammas": GAMMAS,
                "slope_tolerance": SLOPE_TOLERANCE},
        checks=rates_checks(rows))
    write_result(result)
    return result
