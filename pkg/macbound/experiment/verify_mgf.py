"""
Checks the Catoni and kl moment generating function envelopes against exact
binomial enumeration over a grid of block sizes, parameters and means.
"""
import math
import logging

import numpy as np
import pandas as pd

from macbound.bound import (MAX_ENUMERATION_M, catoni_binomial_mgf,
                            catoni_binomial_mgf_enumerated, binomial_kl_mgf)
from macbound.errors import DomainError
from .writer import ConsistencyCheck, ExperimentResult, write_result


BETAS = [.1, .5, 1., 2., 5.]
LAMBDA_FRACTIONS = [.5, 1.]
CATONI_P_POINTS = 21
MAURER_P_POINTS = 101
TOLERANCE = 1e-12
COLUMNS = ["kind", "m", "beta", "lambda_prime", "p", "value", "enumerated",
           "envelope", "ratio"]


def catoni_rows(m, ps):
    rows = []
    for beta in BETAS:
        for fraction in LAMBDA_FRACTIONS:
            lambda_prime = fraction * m
            for p in ps:
                value = catoni_binomial_mgf(m, p, beta, lambda_prime)
                rows.append({
                    "kind": "catoni", "m": m, "beta": beta,
                    "lambda_prime": lambda_prime, "p": p, "value": value,
                    "enumerated": catoni_binomial_mgf_enumerated(
                        m, p, beta, lambda_prime),
                    "envelope": 1., "ratio": value})
    return rows

def maurer_rows(m, ps):
    envelope = 2. * math.sqrt(m)
    rows = []
    for p in ps:
        value = binomial_kl_mgf(m, p)
        rows.append({"kind": "maurer", "m": m, "beta": math.nan,
                     "lambda_prime": float(m), "p": p, "value": value,
                     "enumerated": value, "envelope": envelope,
                     "ratio": value / envelope})
    return rows

def verify_mgf_checks(rows):
    catoni = rows[rows["kind"] == "catoni"]
    maurer = rows[rows["kind"] == "maurer"]
    catoni_max = float(catoni["ratio"].max())
    at_block_size = catoni[catoni["lambda_prime"] == catoni["m"]]
    identity_error = float((at_block_size["value"] - 1.).abs().max())
    enumeration_error = float(
        ((catoni["value"] - catoni["enumerated"]).abs()
         / catoni["enumerated"].clip(lower=1.)).max())
    maurer_max = float(maurer["ratio"].max())
    return [
        ConsistencyCheck(
            "Catoni MGF equals 1 at lambda' = m",
            identity_error < TOLERANCE,
            "max error={:.3g}".format(identity_error)),
        ConsistencyCheck(
            "Catoni MGF <= 1", catoni_max <= 1. + TOLERANCE,
            "max={:.17g}".format(catoni_max)),
        ConsistencyCheck(
            "Catoni closed form equals enumeration",
            enumeration_error <= TOLERANCE,
            "max error={:.3g}".format(enumeration_error)),
        ConsistencyCheck(
            "kl MGF <= 2 sqrt(m)", maurer_max <= 1. + TOLERANCE,
            "max ratio={:.17g}".format(maurer_max))]

def run_verify_mgf(config):
    m_max = config.n_max
    if m_max > MAX_ENUMERATION_M:
        raise DomainError(
            "verify-mgf enumerates up to m={}, got {}".format(
                MAX_ENUMERATION_M, m_max))
    catoni_ps = [float(p) for p in np.linspace(0, 1, CATONI_P_POINTS)]
    maurer_ps = [float(p) for p in np.linspace(0, 1, MAURER_P_POINTS)]
    logging.info(" verify-mgf: m = 1..{}.".format(m_max))
    records = []
    for m in range(1, m_max + 1):
        records.extend(catoni_rows(m, catoni_ps))
    for m in range(1, m_max + 1):
        records.extend(maurer_rows(m, maurer_ps))
    rows = pd.DataFrame(records, columns=COLUMNS)
    result = ExperimentResult(
        config, rows,
        header={"m_max": m_max, "betas": BETAS,
                "lambda_fractions": LAMBDA_FRACTIONS,
                "catoni_p_points": CATONI_P_POINTS,
                "maurer_p_points": MAURER_P_POINTS,
                "tolerance": TOLERANCE},
        checks=verify_mgf_checks(rows))
    write_result(result)
    return result
