from macbound.errors import DomainError


class UnitInterval(float):
    """A float checked to lie in [0, 1]."""

    def __new__(cls, value):
        value = float(value)
        if not 0. <= value <= 1.:
            raise DomainError(
                "UnitInterval: {} is outside [0, 1]".format(value))
        return super(UnitInterval, cls).__new__(cls, value)

    @property
    def value(self):
        return float(self)
