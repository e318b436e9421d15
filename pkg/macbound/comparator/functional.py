import math
import logging

import torch
from scipy.optimize import bisect, minimize_scalar

from macbound.errors import DomainError
from macbound.util import as_float64, scalar_or_tensor


BETA_SEARCH_BOUNDS = (1e-8, 50.)
KL_INVERSE_XTOL = 1e-12
KL_INVERSE_MAX_ITER = 200


def _check_unit_interval(name, x):
    if not torch.all((x >= 0) & (x <= 1)):
        raise DomainError("{} must lie in [0, 1], got {}".format(name, x))

def catoni(beta, r, s):
    """
    Catoni comparator C_beta(r, s) = -log(1 - (1 - e^-beta) s) - beta r.
    Accepts python numbers or tensors for r and s (elementwise).
    """
    if not beta > 0:
        raise DomainError("beta must be positive, got {}".format(beta))
    r_t = as_float64(r)
    s_t = as_float64(s)
    _check_unit_interval("r", r_t)
    _check_unit_interval("s", s_t)
    result = -torch.log1p(math.expm1(-beta) * s_t) - beta * r_t
    return scalar_or_tensor(result, r, s)

def binary_kl(r, s):
    """
    Relative entropy between Bernoulli(r) and Bernoulli(s) with the
    0 log 0 = 0 convention. Returns +inf when s = 0 < r or r < 1 = s.
    """
    r_t = as_float64(r)
    s_t = as_float64(s)
    _check_unit_interval("r", r_t)
    _check_unit_interval("s", s_t)
    result = torch.special.xlogy(r_t, r_t) - torch.special.xlogy(r_t, s_t) \
        + torch.special.xlogy(1 - r_t, 1 - r_t) \
        - torch.special.xlogy(1 - r_t, 1 - s_t)
    # rounding can leave -1e-17 near r == s
    result = result.clamp(min=0.)
    return scalar_or_tensor(result, r, s)

def difference(r, s):
    return s - r

def kl_sup_over_beta(r, s):
    """
    Recovers kl(r, s) as the supremum of C_beta(r, s) over beta > 0.

    The supremum over positive beta only reaches kl(r, s) when s >= r. For
    s < r the search runs on the mirrored pair (1 - r, 1 - s), which has the
    same kl value. Boundary arguments are handed to binary_kl directly.
    """
    r = float(r)
    s = float(s)
    kl = binary_kl(r, s)
    if math.isinf(kl):
        return kl
    if r in (0., 1.) or s in (0., 1.):
        return kl
    if r == s:
        return 0.
    if s < r:
        r, s = 1. - r, 1. - s

    lower, upper = BETA_SEARCH_BOUNDS
    result = minimize_scalar(
        lambda beta: -catoni(beta, r, s), bounds=(lower, upper),
        method="bounded", options={"xatol": 1e-10, "maxiter": 500})
    if upper - result.x < 1e-6:
        logging.warning(
            " kl_sup_over_beta: maximizer at the search bound for "
            "r={} s={}, falling back to binary_kl".format(r, s))
        return kl
    return -float(result.fun)

def kl_inverse_upper(r, c):
    """
    Largest s in [r, 1) with kl(r, s) <= c. Returns 1 when no s < 1 has
    kl(r, s) > c.
    """
    r = float(r)
    c = float(c)
    if c < 0:
        raise DomainError("kl level must be nonnegative, got {}".format(c))
    if not 0 <= r <= 1:
        raise DomainError("r must lie in [0, 1], got {}".format(r))
    if c == 0:
        return r
    if math.isinf(c) or r == 1:
        return 1.
    if r == 0:
        return -math.expm1(-c)

    upper = 1. - KL_INVERSE_XTOL / 2
    if binary_kl(r, upper) <= c:
        return 1.
    return bisect(lambda s: binary_kl(r, s) - c, r, upper,
                  xtol=KL_INVERSE_XTOL, maxiter=KL_INVERSE_MAX_ITER)

def kl_inverse_lower(r, c):
    """Smallest s in (0, r] with kl(r, s) <= c."""
    r = float(r)
    c = float(c)
    if c < 0:
        raise DomainError("kl level must be nonnegative, got {}".format(c))
    return 1. - kl_inverse_upper(1. - r, c)

def pinsker_upper(klval):
    if klval < 0:
        raise DomainError(
            "kl value must be nonnegative, got {}".format(klval))
    return .5 * math.sqrt(klval)
