"""
Block-sample MAC-Bayes bounds. Every bound here is a function of a block
partition and the expected per-block divergences only; how the divergences
were obtained (closed form, Monte Carlo) is up to the caller.
"""
import math

from macbound.comparator import kl_inverse_upper, pinsker_upper
from macbound.errors import DomainError
from .bound_report import BoundReport


def theorem1_bound(part, env, lam, div):
    """
    Right hand side of the general bound

        E d(E L_hat, E L) <= [ J log Phi_m(lam m / n) + sum_j D_j ] / lam

    for a comparator with MGF envelope `env`.
    """
    div.check_partition(part)
    lambda_prime = lam * part.m / part.n
    if not lam > 0 or not env.in_domain(lambda_prime, part.m):
        raise DomainError(
            "lambda={} outside (0, {}] for n={} m={}".format(
                lam, env.domain_bound(part.m) * part.n / part.m,
                part.n, part.m))
    total = div.total
    if math.isinf(total):
        return BoundReport(math.inf, env.comparator, lambda_used=lam)
    value = (part.J * env.log_phi(lambda_prime, part.m) + total) / lam
    return BoundReport(value, env.comparator, lambda_used=lam)

def catoni_rhs(part, div):
    """
    (1/n) sum_j D_j. Bounds both E C_beta(L_hat, L) for every beta > 0 and
    kl(E L_hat, E L), for losses in [0, 1].
    """
    div.check_partition(part)
    return div.total / part.n

def gen_bound_catoni(part, div):
    return pinsker_upper(catoni_rhs(part, div))

def kl_direct_bound(part, div):
    """Binary kl plugged in directly; pays the extra log(2 sqrt(m)) / m."""
    div.check_partition(part)
    m = part.m
    return math.log(2 * math.sqrt(m)) / m + div.total / part.n

def gen_bound_kl_direct(part, div):
    return pinsker_upper(kl_direct_bound(part, div))

def gen_bound_subgaussian(part, sigma_sq, div):
    """
    Difference comparator with a sigma^2-subgaussian loss. Returns the
    optimized bound sqrt(2 sigma^2 sum_j D_j / n) and the lambda attaining it.
    """
    if not sigma_sq > 0:
        raise DomainError(
            "sigma_sq must be positive, got {}".format(sigma_sq))
    div.check_partition(part)
    total = div.total
    if math.isinf(total):
        return math.inf, math.inf
    if total == 0:
        return 0., 0.
    bound = math.sqrt(2 * sigma_sq * total / part.n)
    lambda_star = math.sqrt(2 * part.n * total / sigma_sq)
    return bound, lambda_star

def markov_high_prob_bound(theorem1_value, delta):
    """
    With probability >= 1 - delta over the sample, a nonnegative comparator
    stays below theorem1_value / delta.
    """
    if not 0 < delta < 1:
        raise DomainError("delta must lie in (0, 1), got {}".format(delta))
    return theorem1_value / delta

def population_loss_upper(empirical_loss, part, div):
    """Largest expected population loss compatible with the kl bound."""
    return kl_inverse_upper(empirical_loss, catoni_rhs(part, div))
