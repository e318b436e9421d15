"""
Moment generating function facts behind the Catoni and kl envelopes, with
the brute-force binomial enumerations that check them.
"""
import math

import torch

from macbound.comparator import catoni, binary_kl
from macbound.errors import DomainError


MAX_ENUMERATION_M = 25


def _check_mgf_args(m, p):
    if m < 1:
        raise DomainError("m must be >= 1, got {}".format(m))
    if not 0 <= p <= 1:
        raise DomainError("p must lie in [0, 1], got {}".format(p))

def binomial_log_pmf(m, p):
    """log P(K = k) for K ~ Binomial(m, p), k = 0..m, as a float64 tensor."""
    k = torch.arange(m + 1, dtype=torch.float64)
    p = torch.tensor(p, dtype=torch.float64)
    log_binom = math.lgamma(m + 1) - torch.lgamma(k + 1) \
        - torch.lgamma(m - k + 1)
    return log_binom + torch.special.xlogy(k, p) \
        + torch.special.xlogy(m - k, 1 - p)

def catoni_binomial_mgf(m, p, beta, lambda_prime):
    """
    Closed form of E exp(lambda' C_beta(K / m, p)) for K ~ Binomial(m, p):

        (1 + p (e^{-beta lambda' / m} - 1))^m / (1 + p (e^{-beta} - 1))^lambda'
    """
    _check_mgf_args(m, p)
    if not beta > 0 or not lambda_prime > 0:
        raise DomainError("beta and lambda' must be positive.")
    if p == 1:
        # both factors reduce to exp(-beta lambda')
        return 1.
    log_num = m * math.log1p(p * math.expm1(-beta * lambda_prime / m))
    log_den = lambda_prime * math.log1p(p * math.expm1(-beta))
    return math.exp(log_num - log_den)

def catoni_binomial_mgf_enumerated(m, p, beta, lambda_prime):
    _check_mgf_args(m, p)
    if m > MAX_ENUMERATION_M:
        raise DomainError(
            "m={} exceeds the enumeration cap {}".format(
                m, MAX_ENUMERATION_M))
    log_pmf = binomial_log_pmf(m, p)
    k = torch.arange(m + 1, dtype=torch.float64)
    exponent = lambda_prime * catoni(beta, k / m, p)
    return float(torch.exp(log_pmf + exponent).sum())

def binomial_kl_mgf(m, p, lambda_prime=None):
    """
    E exp(lambda' kl(K / m, p)) for K ~ Binomial(m, p) by exact enumeration,
    lambda' = m unless given. Outcomes of probability zero are skipped, which
    keeps 0 * inf terms out of the sum at p in {0, 1}.
    """
    _check_mgf_args(m, p)
    if m > MAX_ENUMERATION_M:
        raise DomainError(
            "m={} exceeds the enumeration cap {}".format(
                m, MAX_ENUMERATION_M))
    if lambda_prime is None:
        lambda_prime = m
    log_pmf = binomial_log_pmf(m, p)
    support = torch.isfinite(log_pmf)
    k = torch.arange(m + 1, dtype=torch.float64)[support]
    exponent = lambda_prime * binary_kl(k / m, torch.full_like(k, p))
    return float(torch.exp(log_pmf[support] + exponent).sum())

def maurer_sup(m, grid_size=101):
    """Largest binomial_kl_mgf(m, p) over an evenly spaced grid of p."""
    return max(binomial_kl_mgf(m, float(p))
               for p in torch.linspace(0, 1, grid_size, dtype=torch.float64))
