import argparse
import pathlib

from macbound.errors import DomainError


EXPERIMENTS = ["figure1", "counterexample", "rates", "verify-mgf"]

DEFAULT_N_MAX = {"figure1": 250, "counterexample": 256, "rates": 4096,
                 "verify-mgf": 20}


class ExperimentConfig(object):
    def __init__(self, experiment, out_path, n_max=None, mu=.5,
                 trials=100000, seed=48929234, format="csv", n_grid=None,
                 workers=None):
        if experiment not in EXPERIMENTS:
            raise DomainError("Unknown experiment: {}".format(experiment))
        if n_max is None:
            n_max = DEFAULT_N_MAX[experiment]
        if experiment == "verify-mgf":
            if n_max < 1:
                raise DomainError(
                    "n_max is the largest block size for verify-mgf and "
                    "must be >= 1, got {}".format(n_max))
        elif n_max < 10:
            raise DomainError("n_max must be >= 10, got {}".format(n_max))
        if trials < 1:
            raise DomainError("trials must be >= 1, got {}".format(trials))
        if experiment == "figure1" and not 0 < mu < 1:
            raise DomainError("mu must lie in (0, 1), got {}".format(mu))
        if format not in ("csv", "json"):
            raise DomainError("format must be csv or json, got {}".format(
                format))
        self._experiment = experiment
        self._out_path = pathlib.Path(out_path)
        self._n_max = int(n_max)
        self._mu = float(mu)
        self._trials = int(trials)
        self._seed = int(seed)
        self._format = format
        self._n_grid = None if n_grid is None else [int(n) for n in n_grid]
        self._workers = workers

    @staticmethod
    def argparser():
        parser = argparse.ArgumentParser(
            "macbound",
            description="Block-sample MAC-Bayes bound experiments.")
        parser.add_argument("experiment", choices=EXPERIMENTS)
        parser.add_argument(
            "--n-max", type=int, default=None,
            help="Largest n on the grid (largest m for verify-mgf). "
                 "Default depends on the experiment.")
        parser.add_argument(
            "--n-grid", type=int, nargs="+", default=None,
            help="Explicit grid of n values, overrides --n-max.")
        parser.add_argument("--mu", type=float, default=.5)
        parser.add_argument("--trials", type=int, default=100000)
        parser.add_argument("--seed", type=int, default=48929234)
        parser.add_argument("--out", type=pathlib.Path, required=True)
        parser.add_argument("--format", choices=["csv", "json"],
                            default="csv")
        parser.add_argument(
            "--workers", type=int, default=None,
            help="Monte Carlo worker processes; capped by MACBOUND_THREADS. "
                 "Results do not depend on it.")
        return parser

    @staticmethod
    def from_args(args):
        return ExperimentConfig(
            args.experiment, args.out, n_max=args.n_max, mu=args.mu,
            trials=args.trials, seed=args.seed, format=args.format,
            n_grid=args.n_grid, workers=args.workers)

    @property
    def experiment(self):
        return self._experiment

    @property
    def out_path(self):
        return self._out_path

    @property
    def n_max(self):
        return self._n_max

    @property
    def mu(self):
        return self._mu

    @property
    def trials(self):
        return self._trials

    @property
    def seed(self):
        return self._seed

    @property
    def format(self):
        return self._format

    @property
    def n_grid(self):
        return self._n_grid

    @property
    def workers(self):
        return self._workers

    def to_dict(self):
        # workers is left out: it never changes the output
        return {"experiment": self.experiment, "n_max": self.n_max,
                "n_grid": self.n_grid, "mu": self.mu, "trials": self.trials,
                "seed": self.seed, "format": self.format}
