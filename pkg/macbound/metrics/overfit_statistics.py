import math

from ignite.exceptions import NotComputableError
from ignite.metrics.metric import Metric


class SimulationReport(object):
    def __init__(self, trials, overfit_trials, conditional_gap_min,
                 conditional_gap_mean, gen_mean, gap_violations):
        self.trials = trials
        self.overfit_trials = overfit_trials
        self.conditional_gap_min = conditional_gap_min
        self.conditional_gap_mean = conditional_gap_mean
        self.gen_mean = gen_mean
        self.gap_violations = gap_violations

    @property
    def overfit_frequency(self):
        return self.overfit_trials / self.trials

    def to_dict(self):
        return {"trials": self.trials,
                "overfit_trials": self.overfit_trials,
                "overfit_frequency": self.overfit_frequency,
                "conditional_gap_min": self.conditional_gap_min,
                "conditional_gap_mean": self.conditional_gap_mean,
                "gen_mean": self.gen_mean,
                "gap_violations": self.gap_violations}

    def __repr__(self):
        return "SimulationReport({})".format(
            ", ".join("{}={}".format(k, v) for k, v in self.to_dict().items()))


class OverfitStatistics(Metric):
    """
    Aggregates chunks of the overfitting simulation. Gap statistics are
    conditional on the trials where the overfitted hypothesis was returned;
    every other trial has zero gap.
    """
    def __init__(self, output_transform=lambda x: x):
        super(OverfitStatistics, self).__init__(output_transform)

    def reset(self):
        self._num_trials = 0
        self._num_overfit = 0
        self._gap_sum = 0.
        self._gap_min = math.inf
        self._violations = 0

    def update(self, output):
        num_trials, num_overfit, gap_sum, gap_min, violations = output
        self._num_trials += int(num_trials)
        self._num_overfit += int(num_overfit)
        self._gap_sum += float(gap_sum)
        self._gap_min = min(self._gap_min, float(gap_min))
        self._violations += int(violations)

    def compute(self):
        if self._num_trials == 0:
            raise NotComputableError(
                'OverfitStatistics must have at least one trial before it '
                'can be computed')
        if self._num_overfit == 0:
            gap_min = None
            gap_mean = None
        else:
            gap_min = self._gap_min
            gap_mean = self._gap_sum / self._num_overfit
        return SimulationReport(
            self._num_trials, self._num_overfit, gap_min, gap_mean,
            self._gap_sum / self._num_trials, self._violations)
