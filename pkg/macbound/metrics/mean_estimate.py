import math

from ignite.exceptions import NotComputableError
from ignite.metrics.metric import Metric


class MeanEstimate(Metric):
    """
    Running Monte Carlo mean with its standard error. Each update is a chunk
    summary (sum, sum of squares, count) of per-trial values.
    """
    def __init__(self, output_transform=lambda x: x):
        super(MeanEstimate, self).__init__(output_transform)

    def reset(self):
        self._sum = 0.
        self._sum_sq = 0.
        self._num_trials = 0

    def update(self, output):
        total, total_sq, num_trials = output
        self._sum += float(total)
        self._sum_sq += float(total_sq)
        self._num_trials += int(num_trials)

    def compute(self):
        if self._num_trials == 0:
            raise NotComputableError(
                'MeanEstimate must have at least one trial before it can be '
                'computed')
        mean = self._sum / self._num_trials
        if self._num_trials == 1:
            return mean, math.nan
        var = (self._sum_sq - self._sum * mean) / (self._num_trials - 1)
        return mean, math.sqrt(max(var, 0.) / self._num_trials)
