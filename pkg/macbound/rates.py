"""
Order-wise rates of the generalization bound when the expected block
divergences grow like O(m^gamma) / Theta(n) and the block size is
m = Theta(n^alpha). Rates are kept as (exponent of n, log factor) pairs.
"""
import math

import numpy as np
from scipy.stats import linregress

from macbound.errors import DomainError


class RateAssumption(object):
    def __init__(self, gamma, epsilon=None):
        if not gamma >= 0:
            raise DomainError("gamma must be >= 0, got {}".format(gamma))
        if epsilon is not None and not epsilon > 0:
            raise DomainError(
                "epsilon must be positive, got {}".format(epsilon))
        self._gamma = float(gamma)
        self._epsilon = epsilon

    @property
    def gamma(self):
        return self._gamma

    @property
    def epsilon(self):
        return self._epsilon


class RateResult(object):
    def __init__(self, exponent, log_factor=False, alpha_used=None):
        self._exponent = float(exponent)
        self._log_factor = log_factor
        self._alpha_used = alpha_used

    @property
    def exponent(self):
        return self._exponent

    @property
    def log_factor(self):
        return self._log_factor

    @property
    def alpha_used(self):
        return self._alpha_used

    def to_dict(self):
        return {"exponent": self.exponent, "log_factor": self.log_factor,
                "alpha_used": self.alpha_used}

    def __eq__(self, other):
        return isinstance(other, RateResult) \
            and self.to_dict() == other.to_dict()

    def __repr__(self):
        return "RateResult(n^{}{}, alpha={})".format(
            self.exponent, " log n" if self.log_factor else "",
            self.alpha_used)


def _check_gamma_alpha(gamma, alpha):
    if not gamma >= 0:
        raise DomainError("gamma must be >= 0, got {}".format(gamma))
    if not 0 <= alpha <= 1:
        raise DomainError("alpha must lie in [0, 1], got {}".format(alpha))

def gen_rate_exponent(gamma, alpha):
    """gen = O(n^((alpha (gamma - 1) - 1) / 2)) with no assumption on L_hat."""
    _check_gamma_alpha(gamma, alpha)
    return RateResult((alpha * (gamma - 1.) - 1.) / 2., False, alpha)

def optimal_alpha(gamma):
    return 1. if gamma < 1 else 0.

def fast_rate_exponents(gamma, alpha, epsilon):
    """
    Rate when the expected empirical loss is O(n^-epsilon): a kl term
    O(n^(alpha (gamma - 1) - 1)) plus a residual O(n^-epsilon log n).
    """
    _check_gamma_alpha(gamma, alpha)
    if not epsilon > 0:
        raise DomainError("epsilon must be positive, got {}".format(epsilon))
    return (alpha * (gamma - 1.) - 1.,
            RateResult(-epsilon, True, alpha))

def optimal_gen_rate(gamma):
    return gen_rate_exponent(gamma, optimal_alpha(gamma))

def optimal_fast_rate(gamma, epsilon):
    return fast_rate_exponents(gamma, optimal_alpha(gamma), epsilon)

def lemma3_upper(r, x):
    """
    Upper bound on s given kl(r, s) <= x and r <= 1/2:
    s <= 2x - (r/2) ln r + r + r^2, with (0/2) ln 0 = 0.
    """
    if not 0 <= r <= .5:
        raise DomainError("r must lie in [0, 1/2], got {}".format(r))
    if not x >= 0:
        raise DomainError("x must be >= 0, got {}".format(x))
    log_term = 0. if r == 0 else r / 2. * math.log(r)
    return 2. * x - log_term + r + r ** 2

def empirical_rate_fit(points):
    """
    Least-squares fit of ln(value) against ln(n). Returns
    (slope, intercept, r_squared).
    """
    if len(points) < 3:
        raise DomainError(
            "empirical_rate_fit needs >= 3 points, got {}".format(len(points)))
    ns = np.array([p[0] for p in points], dtype=np.float64)
    values = np.array([p[1] for p in points], dtype=np.float64)
    if len(set(ns.tolist())) != len(ns):
        raise DomainError("empirical_rate_fit needs distinct n values.")
    if not np.all(values > 0) or not np.all(np.isfinite(values)):
        raise DomainError("empirical_rate_fit needs finite positive values.")
    fit = linregress(np.log(ns), np.log(values))
    return float(fit.slope), float(fit.intercept), float(fit.rvalue ** 2)

# E KL = m / (2 (n - m)) = O(m) / Theta(n) for m <= n / 2
GAUSSIAN_EXAMPLE_ASSUMPTION = RateAssumption(gamma=1.)
