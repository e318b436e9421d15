"""
Bounds on the expected generalization error of the Gaussian mean example
against a Monte Carlo estimate of the true value, for m = 1, m = n / 2 and
m = sqrt(n), each under the Catoni, direct kl and subgaussian comparators.
"""
import math
import logging

import pandas as pd

from macbound.bound import gen_bound_kl_direct, gen_bound_subgaussian
from macbound.errors import DomainError
from macbound.scenario import (GaussianScenario, example_gen_bound,
                               mc_gen_error)
from .grid import largest_divisor_at_most, resolve_grid
from .writer import ConsistencyCheck, ExperimentResult, write_result


DEFAULT_GRID = list(range(10, 251, 10))
SIGMA_SQ = .25
COLUMNS = ["num_training_samples", "mc", "cat1", "kl1", "diff1", "klnhalf",
           "catnhalf", "diffnhalf", "klsqrt", "catsqrt", "diffsqrt",
           "mc_std_error", "m_nhalf", "m_sqrt_requested", "m_sqrt"]


def block_sizes(n):
    """(m for n/2, requested m for sqrt(n), effective m for sqrt(n))."""
    sqrt_requested = math.ceil(math.sqrt(n))
    return (largest_divisor_at_most(n, n // 2),
            sqrt_requested,
            largest_divisor_at_most(n, sqrt_requested))

def bounds_at(mu, n, m):
    """(catoni, kl, diff) generalization bounds for block size m."""
    sc = GaussianScenario(mu, n, m)
    profile = sc.divergence_profile()
    cat = example_gen_bound(sc)
    kl = gen_bound_kl_direct(sc.partition, profile)
    diff, _ = gen_bound_subgaussian(sc.partition, SIGMA_SQ, profile)
    return cat, kl, diff

def figure1_row(config, n):
    if n < 4:
        raise DomainError("figure1 needs n >= 4, got {}".format(n))
    m_nhalf, m_sqrt_requested, m_sqrt = block_sizes(n)
    mc, std_error = mc_gen_error(
        GaussianScenario(config.mu, n, 1), config.trials, (config.seed, n),
        workers=config.workers)
    cat1, kl1, diff1 = bounds_at(config.mu, n, 1)
    catnhalf, klnhalf, diffnhalf = bounds_at(config.mu, n, m_nhalf)
    catsqrt, klsqrt, diffsqrt = bounds_at(config.mu, n, m_sqrt)
    return {"num_training_samples": n, "mc": mc, "cat1": cat1, "kl1": kl1,
            "diff1": diff1, "klnhalf": klnhalf, "catnhalf": catnhalf,
            "diffnhalf": diffnhalf, "klsqrt": klsqrt, "catsqrt": catsqrt,
            "diffsqrt": diffsqrt, "mc_std_error": std_error,
            "m_nhalf": m_nhalf, "m_sqrt_requested": m_sqrt_requested,
            "m_sqrt": m_sqrt}

def figure1_checks(rows):
    checks = []
    for row in rows.to_dict("records"):
        n = row["num_training_samples"]
        closed_form = .5 * math.sqrt(1. / (2. * (n - 1)))
        checks.append(ConsistencyCheck(
            "n={} cat1 closed form".format(n),
            abs(row["cat1"] - closed_form) <= 1e-12 * closed_form))
        std_error = row["mc_std_error"]
        slack = 0. if math.isnan(std_error) else 4 * std_error
        checks.append(ConsistencyCheck(
            "n={} mc <= cat1 + 4 std errors".format(n),
            row["mc"] <= row["cat1"] + slack,
            "mc={:.6g} cat1={:.6g}".format(row["mc"], row["cat1"])))
        for suffix in ["1", "nhalf", "sqrt"]:
            cat = row["cat" + suffix]
            checks.append(ConsistencyCheck(
                "n={} kl{} > cat{}".format(n, suffix, suffix),
                row["kl" + suffix] > cat))
            checks.append(ConsistencyCheck(
                "n={} diff{} > cat{}".format(n, suffix, suffix),
                row["diff" + suffix] > cat))
    return checks

def run_figure1(config):
    grid = resolve_grid(config, DEFAULT_GRID)
    logging.info(" figure1: n in {}, mu={}, {} trials per n.".format(
        grid, config.mu, config.trials))
    rows = pd.DataFrame([figure1_row(config, n) for n in grid],
                        columns=COLUMNS)
    result = ExperimentResult(
        config, rows, header={"sigma_sq": SIGMA_SQ, "grid": grid},
        checks=figure1_checks(rows))
    write_result(result)
    return result
