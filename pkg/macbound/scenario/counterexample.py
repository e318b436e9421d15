"""
A learning scenario on Z = {1, ..., K} with 0/1 losses where the expected
block divergences vanish like O(1/sqrt(n)) while, with small probability
phi, the algorithm overfits badly to the sample.

The overfit region is the lexicographically first `region_count` tuples of
[K]^m. Membership is a digit-wise comparison against the base-K digits of
region_count - 1, so no K^m-sized integers appear outside of parameter
construction.
"""
import math
from fractions import Fraction
from functools import partial

import torch

from macbound.errors import BlockPartitionError, DomainError
from macbound.metrics import OverfitStatistics
from macbound.simulator import run_monte_carlo


class CounterexampleParams(object):
    """
    Parameters of the overfitting scenario. The constructor only checks
    ranges; `params_from_n` derives the parameter choices from (n, m).
    """
    def __init__(self, n, m, K, alpha, phi, lam, region_count=None):
        if n < 1 or m < 1 or m > n or n % m != 0:
            raise BlockPartitionError(
                "CounterexampleParams: m={} must divide n={}".format(m, n))
        if K < 1:
            raise DomainError("K must be >= 1, got {}".format(K))
        if not 0 < alpha <= 1:
            raise DomainError("alpha must lie in (0, 1], got {}".format(alpha))
        if not 0 <= phi <= 1:
            raise DomainError("phi must lie in [0, 1], got {}".format(phi))
        if not lam > 0:
            raise DomainError("lambda must be positive, got {}".format(lam))
        if region_count is not None and not 1 <= region_count <= K ** m:
            raise DomainError(
                "region_count must lie in [1, K^m], got {}".format(
                    region_count))
        self._n = int(n)
        self._m = int(m)
        self._K = int(K)
        self._alpha = float(alpha)
        self._phi = float(phi)
        self._lam = float(lam)
        self._region_count = region_count
        if region_count is not None:
            self._region_digits = _base_digits(region_count - 1, K, m)
        else:
            self._region_digits = None

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def K(self):
        return self._K

    @property
    def alpha(self):
        return self._alpha

    @property
    def prior_mass_all_zeros(self):
        return self._alpha

    @property
    def phi(self):
        return self._phi

    @property
    def lam(self):
        return self._lam

    @property
    def region_count(self):
        return self._region_count

    @property
    def region_digits(self):
        if self._region_digits is None:
            raise DomainError(
                "These parameters carry no overfit region (analytic only).")
        return self._region_digits

    def to_dict(self):
        return {"n": self.n, "m": self.m, "K": self.K, "alpha": self.alpha,
                "phi": self.phi, "lambda": self.lam,
                "region_count": self.region_count}

    def __repr__(self):
        return "CounterexampleParams({})".format(
            ", ".join("{}={}".format(k, v) for k, v in self.to_dict().items()))


def _base_digits(value, base, width):
    digits = []
    for _ in range(width):
        value, digit = divmod(value, base)
        digits.append(digit)
    return tuple(reversed(digits))

def params_from_n(n, m, k_override=None, enforce_block_ratio=True):
    """
    K = ceil(3 n ln n), alpha = exp(-m/n), lambda = sqrt(n) and
    phi = region_count / K^m with region_count the nearest positive integer
    to K^m / (n ln n).

    `k_override` and `enforce_block_ratio=False` exist for tests that need
    K^m small enough to enumerate.
    """
    if n < 4:
        raise DomainError("n must be >= 4, got {}".format(n))
    if m < 1 or n % m != 0:
        raise BlockPartitionError(
            "params_from_n: m={} must divide n={}".format(m, n))
    if enforce_block_ratio and 2 * m > n:
        raise BlockPartitionError(
            "params_from_n: need m <= n / 2, got n={} m={}".format(n, m))
    n_log_n = n * math.log(n)
    if k_override is None:
        K = math.ceil(3 * n_log_n)
    else:
        K = int(k_override)
    size = K ** m
    region_count = round(Fraction(size) / Fraction(n_log_n))
    region_count = min(max(region_count, 1), size)
    return CounterexampleParams(
        n, m, K, alpha=math.exp(-m / n),
        phi=float(Fraction(region_count, size)), lam=math.sqrt(n),
        region_count=region_count)


class Hypothesis(object):
    def __call__(self, z):
        raise NotImplementedError()


class AllZeros(Hypothesis):
    """w_0: zero loss everywhere."""
    def __call__(self, z):
        return 0

    def __eq__(self, other):
        return isinstance(other, AllZeros)

    def __hash__(self):
        return hash("AllZeros")

    def __repr__(self):
        return "AllZeros()"


class OverfitComplement(Hypothesis):
    """Loss 0 on `zero_points` and 1 everywhere else."""
    def __init__(self, zero_points):
        self._zero_points = frozenset(zero_points)

    @property
    def zero_points(self):
        return self._zero_points

    def __call__(self, z):
        return 0 if z in self._zero_points else 1

    def __eq__(self, other):
        return isinstance(other, OverfitComplement) \
            and self.zero_points == other.zero_points

    def __hash__(self):
        return hash(self._zero_points)

    def __repr__(self):
        return "OverfitComplement({} points)".format(len(self._zero_points))


def _region_mask(blocks, region_digits):
    """Rows of `blocks` (values in 1..K) whose rank is < region_count."""
    digits = blocks - 1
    below = torch.zeros(blocks.size(0), dtype=torch.bool)
    tied = torch.ones(blocks.size(0), dtype=torch.bool)
    for i, bound in enumerate(region_digits):
        below |= tied & digits[:, i].lt(bound)
        tied &= digits[:, i].eq(bound)
    return below | tied

def _check_points(points, params):
    for z in points:
        if not 1 <= z <= params.K:
            raise DomainError(
                "sample value {} outside 1..{}".format(z, params.K))

def in_overfit_region(block, params):
    if len(block) != params.m:
        raise DomainError(
            "block has {} entries, expected m={}".format(len(block), params.m))
    _check_points(block, params)
    blocks = torch.tensor([list(block)], dtype=torch.int64)
    return bool(_region_mask(blocks, params.region_digits)[0])

def run_algorithm(sample, params):
    """
    Returns the overfitted hypothesis built from samples m+1..n when the
    first block falls in the overfit region, and w_0 otherwise.
    """
    if len(sample) != params.n:
        raise DomainError(
            "sample has {} entries, expected n={}".format(
                len(sample), params.n))
    if in_overfit_region(tuple(sample[:params.m]), params):
        return OverfitComplement(sample[params.m:])
    return AllZeros()

def empirical_loss(h, sample, params):
    if isinstance(h, AllZeros):
        return 0.
    misses = sum(1 for z in sample if z not in h.zero_points)
    return misses / params.n

def population_loss_exact(h, params):
    """Exact population loss under the uniform law on 1..K."""
    if isinstance(h, AllZeros):
        return Fraction(0)
    return Fraction(params.K - len(h.zero_points), params.K)

def _phi_times(phi, value):
    # 0 * inf = 0 here: no overfit mass means the term is absent
    return 0. if phi == 0 else phi * value

def _log_inv_one_minus_alpha(params):
    # no prior mass off w_0
    if params.alpha == 1.:
        return math.inf
    return -math.log1p(-params.alpha)

def divergence_block1_overfit(params):
    return _log_inv_one_minus_alpha(params)

def divergence_block1_normal(params):
    return -math.log(params.alpha)

def block1_divergence(block, params):
    """Realized KL of the first-block posterior for a given first block."""
    if in_overfit_region(block, params):
        return divergence_block1_overfit(params)
    return divergence_block1_normal(params)

def divergence_blockj_upper(params):
    """Upper bound on E KL(P_{W|S_j} || Q_W) for every block j >= 2."""
    return divergence_block1_normal(params) \
        + _phi_times(params.phi, params.m * math.log(params.K)) \
        + _phi_times(params.phi, _log_inv_one_minus_alpha(params))

def divergence_sum_upper(params):
    n, m, phi = params.n, params.m, params.phi
    return _phi_times(phi, _log_inv_one_minus_alpha(params)) \
        + n / m * divergence_block1_normal(params) \
        + n * _phi_times(phi, math.log(params.K)) \
        + n / m * _phi_times(phi, _log_inv_one_minus_alpha(params))

def rhs_bound(params):
    """
    Difference-comparator bound with the Hoeffding envelope
    Phi_m(l) = exp(l^2 / (8m)): lambda / (8n) + sum_j D_j / lambda.
    """
    return params.lam / (8. * params.n) + divergence_sum_upper(params) \
        / params.lam

def rhs_final_constant(n, m):
    """
    Constant C(n) with sqrt(n) * rhs_bound <= C(n). The bracket does not
    depend on m.
    """
    log_n = math.log(n)
    return 17. / 8. + math.log(n + 1) / (n * log_n) \
        + (math.log(n + 1) + math.log(3)) / log_n \
        + math.log(log_n) / log_n

def overfit_gap_lower(n, m):
    return (1. - m / n) * (1. - 1. / (3. * math.log(n)))

def instantaneous_divergence_upper(n, m):
    """
    Upper bound on the realized divergence sum on the overfit event; the
    dominating term is log(n + m).
    """
    log_n = math.log(n)
    return math.log(n + m) - math.log(m) + 2. + math.log(3) / log_n \
        + math.log(log_n) / log_n + math.log((n + m) / m) / (n * log_n)

def draw_overfit_samples(generator, size, n, m, K, region_digits):
    """
    Draws `size` samples from the uniform law on [K]^n and returns the ones
    whose first block is in the overfit region, as a (num_overfit, n) tensor.
    The remaining n - m points are only drawn for those rows; the draw order
    (all first blocks, then the tails) is fixed by the generator.
    """
    heads = torch.randint(1, K + 1, (size, m), generator=generator,
                          dtype=torch.int64)
    heads = heads[_region_mask(heads, region_digits)]
    tails = torch.randint(1, K + 1, (heads.size(0), n - m),
                          generator=generator, dtype=torch.int64)
    return torch.cat([heads, tails], 1)

def _overfit_chunk(generator, size, n, m, K, region_digits, gap_lower):
    """
    Returns (trials, overfit_trials, gap_sum, gap_min, gap_violations) for
    one chunk. Trials outside the overfit region return w_0 and have gap 0.
    """
    overfit = draw_overfit_samples(generator, size, n, m, K, region_digits)
    num_overfit = overfit.size(0)
    if num_overfit == 0:
        return size, 0, 0., math.inf, 0

    head = overfit[:, :m]
    tail = overfit[:, m:].sort(1).values
    distinct = tail[:, 1:].ne(tail[:, :-1]).sum(1) + 1
    population = (K - distinct).double() / K
    misses = head.unsqueeze(2).ne(tail.unsqueeze(1)).all(2).sum(1)
    gaps = population - misses.double() / n
    return (size, num_overfit, float(gaps.sum()), float(gaps.min()),
            int(gaps.lt(gap_lower).sum()))

def mc_simulate(params, trials, seed, workers=None):
    """
    Draws samples uniformly from [K]^n, runs the algorithm and evaluates
    exact losses. Returns a SimulationReport.
    """
    if params.n - params.m < 1:
        raise DomainError("mc_simulate needs m < n.")
    chunk_fn = partial(
        _overfit_chunk, n=params.n, m=params.m, K=params.K,
        region_digits=params.region_digits,
        gap_lower=overfit_gap_lower(params.n, params.m))
    metrics = run_monte_carlo(
        chunk_fn, trials, seed, {"overfit": OverfitStatistics()},
        workers=workers,
        description="Overfit simulation n={} m={}".format(
            params.n, params.m))
    return metrics["overfit"]
