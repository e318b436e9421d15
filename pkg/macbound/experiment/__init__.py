from .config import ExperimentConfig, EXPERIMENTS, DEFAULT_N_MAX
from .writer import (ExperimentResult, ConsistencyCheck, make_header,
                     json_safe, write_csv, write_json, write_result,
                     print_checks)
from .grid import largest_divisor_at_most, resolve_grid
from .figure1 import run_figure1
from .counterexample import run_counterexample
from .rates import run_rates
from .verify_mgf import run_verify_mgf


RUNNERS = {"figure1": run_figure1,
           "counterexample": run_counterexample,
           "rates": run_rates,
           "verify-mgf": run_verify_mgf}
