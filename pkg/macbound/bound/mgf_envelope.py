import math

from macbound.comparator import Catoni, BinaryKl, Difference
from macbound.errors import DomainError


class MgfEnvelope(object):
    """
    Upper bound Phi_m(lambda') on E exp(lambda' d(L_hat_m, L)) for an m-sample
    empirical loss, required to hold on the domain (0, b].
    """
    kind = None

    def domain_bound(self, m):
        raise NotImplementedError()

    def log_phi(self, lambda_prime, m):
        raise NotImplementedError()

    @property
    def comparator(self):
        raise NotImplementedError()

    def phi(self, lambda_prime, m):
        return math.exp(self.log_phi(lambda_prime, m))

    def in_domain(self, lambda_prime, m):
        return 0 < lambda_prime <= self.domain_bound(m)

    def check_domain(self, lambda_prime, m):
        if not self.in_domain(lambda_prime, m):
            raise DomainError(
                "{}: lambda'={} outside (0, {}] for m={}".format(
                    self.kind, lambda_prime, self.domain_bound(m), m))

    def to_dict(self):
        return {"kind": self.kind}


class CatoniUnit(MgfEnvelope):
    """
    Catoni comparator on [0, 1] losses. Phi_m = 1 on (0, m]: the Bernoulli
    log-MGF is convex and vanishes at 0, so the ratio in the closed form is at
    most 1 for lambda' <= m, with equality at lambda' = m.
    """
    kind = "catoni_unit"

    def __init__(self, beta=1.0):
        self._comparator = Catoni(beta)

    @property
    def comparator(self):
        return self._comparator

    def domain_bound(self, m):
        return float(m)

    def log_phi(self, lambda_prime, m):
        self.check_domain(lambda_prime, m)
        return 0.

    def to_dict(self):
        return {"kind": self.kind, "beta": self._comparator.beta}


class MaurerKl(MgfEnvelope):
    """
    Binary kl comparator on [0, 1] losses. Phi_m(m) = 2 sqrt(m) and by Jensen
    Phi_m(lambda') = (2 sqrt(m))^(lambda'/m) on (0, m].
    """
    kind = "maurer_kl"

    def __init__(self):
        self._comparator = BinaryKl()

    @property
    def comparator(self):
        return self._comparator

    def domain_bound(self, m):
        return float(m)

    def log_phi(self, lambda_prime, m):
        self.check_domain(lambda_prime, m)
        return lambda_prime / m * math.log(2 * math.sqrt(m))


class Subgaussian(MgfEnvelope):
    kind = "subgaussian"

    def __init__(self, sigma_sq):
        if not sigma_sq > 0:
            raise DomainError(
                "sigma_sq must be positive, got {}".format(sigma_sq))
        self._sigma_sq = float(sigma_sq)
        self._comparator = Difference()

    @property
    def sigma_sq(self):
        return self._sigma_sq

    @property
    def comparator(self):
        return self._comparator

    def domain_bound(self, m):
        return math.inf

    def in_domain(self, lambda_prime, m):
        return 0 < lambda_prime < math.inf

    def log_phi(self, lambda_prime, m):
        self.check_domain(lambda_prime, m)
        return self.sigma_sq * lambda_prime ** 2 / (2 * m)

    def to_dict(self):
        return {"kind": self.kind, "sigma_sq": self.sigma_sq}
