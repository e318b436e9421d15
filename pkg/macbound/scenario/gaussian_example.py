"""
Mean estimation of N(mu, 1) data under the truncated square loss. The
algorithm returns the sample mean; its block posteriors are Gaussian and the
prior is N(mu, (n - m) / n^2).
"""
import math
from functools import partial

import torch
from torch.distributions import Normal
from torch.distributions.kl import kl_divergence

from macbound.bound import BlockPartition, DivergenceProfile, gen_bound_catoni
from macbound.errors import DomainError
from macbound.metrics import MeanEstimate
from macbound.simulator import run_monte_carlo
from macbound.util import as_float64, scalar_or_tensor


_STANDARD_NORMAL = Normal(torch.tensor(0., dtype=torch.float64),
                          torch.tensor(1., dtype=torch.float64))


class GaussianPosterior(object):
    """N(mean, variance); variance 0 is a point mass."""
    def __init__(self, mean, variance):
        if variance < 0:
            raise DomainError(
                "variance must be >= 0, got {}".format(variance))
        self._mean = mean
        self._variance = float(variance)

    @property
    def mean(self):
        return self._mean

    @property
    def variance(self):
        return self._variance

    @property
    def is_point_mass(self):
        return self._variance == 0

    def distribution(self):
        return Normal(as_float64(self.mean),
                      as_float64(math.sqrt(self.variance)))

    def __repr__(self):
        return "GaussianPosterior(mean={}, variance={})".format(
            self.mean, self.variance)


def gaussian_kl(p, q):
    """
    KL(p || q) between Gaussians. A point mass against a continuous q has
    no density and the divergence is +inf.
    """
    if p.is_point_mass and not q.is_point_mass:
        return math.inf
    if q.is_point_mass:
        return 0. if p.is_point_mass and p.mean == q.mean else math.inf
    result = kl_divergence(p.distribution(), q.distribution())
    return scalar_or_tensor(result, p.mean, q.mean)


class GaussianScenario(object):
    def __init__(self, mu, n, m):
        if not 0 < mu < 1:
            raise DomainError("mu must lie in (0, 1), got {}".format(mu))
        self._partition = BlockPartition(n, m)
        self._mu = float(mu)

    @property
    def mu(self):
        return self._mu

    @property
    def n(self):
        return self._partition.n

    @property
    def m(self):
        return self._partition.m

    @property
    def partition(self):
        return self._partition

    @property
    def posterior_variance(self):
        return (self.n - self.m) / self.n ** 2

    def block_posterior(self, block_sum):
        """Law of the sample mean given the block sum T_j."""
        mean = self.mu * (self.n - self.m) / self.n + block_sum / self.n
        return GaussianPosterior(mean, self.posterior_variance)

    def prior(self):
        return GaussianPosterior(self.mu, self.posterior_variance)

    def divergence_profile(self):
        return DivergenceProfile.uniform(
            expected_block_divergence(self), self.partition.J)

    def __repr__(self):
        return "GaussianScenario(mu={}, n={}, m={})".format(
            self.mu, self.n, self.m)


def truncated_loss(w, z):
    result = torch.clamp((as_float64(w) - as_float64(z)) ** 2, max=1.)
    return scalar_or_tensor(result, w, z)

def population_loss(w, mu):
    """
    L(w) = E min((w - Z)^2, 1) for Z ~ N(mu, 1). With D = w - Z ~ N(d, 1),
    d = w - mu, and X = D - d standard normal on (a, b) = (-1 - d, 1 - d):

        L(w) = P(|D| >= 1) + d^2 P(a<X<b) + 2 d E[X; a<X<b] + E[X^2; a<X<b]
    """
    d = as_float64(w) - mu
    a = -1. - d
    b = 1. - d
    cdf_a = _STANDARD_NORMAL.cdf(a)
    cdf_b = _STANDARD_NORMAL.cdf(b)
    pdf_a = torch.exp(_STANDARD_NORMAL.log_prob(a))
    pdf_b = torch.exp(_STANDARD_NORMAL.log_prob(b))
    inside = cdf_b - cdf_a
    outside = cdf_a + _STANDARD_NORMAL.cdf(-b)
    first_moment = pdf_a - pdf_b
    second_moment = inside + a * pdf_a - b * pdf_b
    result = outside + d ** 2 * inside + 2 * d * first_moment + second_moment
    return scalar_or_tensor(result.clamp(0., 1.), w)

def expected_block_divergence(sc):
    """E KL(P_{W|S_j} || Q_W) = m / (2 (n - m)); +inf when m = n."""
    if sc.m == sc.n:
        return math.inf
    return sc.m / (2. * (sc.n - sc.m))

def example_gen_bound(sc):
    """gen <= (1/2) sqrt(1 / (2 (n - m))); +inf when m = n."""
    if sc.m == sc.n:
        return math.inf
    return .5 * math.sqrt(1. / (2. * (sc.n - sc.m)))

def _block_divergence_chunk(generator, size, mu, n, m):
    sc = GaussianScenario(mu, n, m)
    block_sums = mu * m + math.sqrt(m) * torch.randn(
        size, generator=generator, dtype=torch.float64)
    values = gaussian_kl(sc.block_posterior(block_sums), sc.prior())
    return float(values.sum()), float((values ** 2).sum()), size

def _gen_error_chunk(generator, size, mu, n):
    samples = mu + torch.randn(
        size, n, generator=generator, dtype=torch.float64)
    w = samples.mean(1)
    empirical = truncated_loss(w.unsqueeze(1), samples).mean(1)
    gaps = population_loss(w, mu) - empirical
    return float(gaps.sum()), float((gaps ** 2).sum()), size

def mc_block_divergence(sc, trials, seed, workers=None):
    """
    Monte Carlo estimate of the expected block divergence from draws of the
    block sum T_j ~ N(mu m, m). Returns (estimate, std_error).
    """
    if sc.m == sc.n:
        raise DomainError(
            "mc_block_divergence needs m < n; the m = n divergence is +inf.")
    metrics = run_monte_carlo(
        partial(_block_divergence_chunk, mu=sc.mu, n=sc.n, m=sc.m),
        trials, seed, {"divergence": MeanEstimate()}, workers=workers,
        description="Block divergence n={} m={}".format(sc.n, sc.m))
    return metrics["divergence"]

def mc_gen_error(sc, trials, seed, workers=None):
    """
    Monte Carlo estimate of E[L(W) - L_hat(W, S)] with W the sample mean.
    Returns (estimate, std_error).
    """
    metrics = run_monte_carlo(
        partial(_gen_error_chunk, mu=sc.mu, n=sc.n),
        trials, seed, {"gen": MeanEstimate()}, workers=workers,
        description="Generalization error n={}".format(sc.n))
    return metrics["gen"]

def example_profile_bound(sc):
    """example_gen_bound obtained through the generic engine."""
    return gen_bound_catoni(sc.partition, sc.divergence_profile())
