from .mean_estimate import MeanEstimate
from .overfit_statistics import OverfitStatistics, SimulationReport
