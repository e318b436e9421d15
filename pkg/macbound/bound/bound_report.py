import math


class BoundReport(object):
    def __init__(self, value, comparator, lambda_used=None):
        self._value = float(value)
        self._comparator = comparator
        self._lambda_used = lambda_used

    @property
    def value(self):
        return self._value

    @property
    def comparator(self):
        return self._comparator

    @property
    def lambda_used(self):
        return self._lambda_used

    @property
    def finite(self):
        return not math.isinf(self._value)

    def to_dict(self):
        return {"value": self.value, "comparator": self.comparator.to_dict(),
                "lambda_used": self.lambda_used, "finite": self.finite}

    def __repr__(self):
        return "BoundReport(value={}, comparator={}, lambda={})".format(
            self.value, self.comparator, self.lambda_used)
