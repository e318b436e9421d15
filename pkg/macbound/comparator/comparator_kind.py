from macbound.errors import DomainError
from .functional import catoni, binary_kl, difference


class ComparatorKind(object):
    """
    A comparator d(r, s) between an empirical and a population loss. Objects
    are callable and evaluate d elementwise.
    """
    name = None

    def __call__(self, r, s):
        raise NotImplementedError()

    @property
    def nonnegative(self):
        return False

    def to_dict(self):
        return {"name": self.name}

    def __eq__(self, other):
        return type(self) == type(other) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self):
        return "{}({})".format(
            self.__class__.__name__,
            ", ".join("{}={}".format(k, v) for k, v in self.to_dict().items()
                      if k != "name"))


class Catoni(ComparatorKind):
    name = "catoni"

    def __init__(self, beta=1.0):
        if not beta > 0:
            raise DomainError("beta must be positive, got {}".format(beta))
        self._beta = float(beta)

    @property
    def beta(self):
        return self._beta

    def __call__(self, r, s):
        return catoni(self.beta, r, s)

    def to_dict(self):
        return {"name": self.name, "beta": self.beta}


class BinaryKl(ComparatorKind):
    name = "binary_kl"

    def __call__(self, r, s):
        return binary_kl(r, s)

    @property
    def nonnegative(self):
        return True


class Difference(ComparatorKind):
    name = "difference"

    def __call__(self, r, s):
        return difference(r, s)
