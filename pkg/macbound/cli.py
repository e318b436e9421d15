import sys
import logging

from macbound.errors import MacBoundError, ConsistencyError
from macbound.experiment import ExperimentConfig, RUNNERS, print_checks


def experiment_argparser():
    return ExperimentConfig.argparser()

def run_experiment(config):
    """
    Runs one experiment, writes its output file and reports the consistency
    checks. Raises ConsistencyError after writing if any check failed.
    """
    result = RUNNERS[config.experiment](config)
    logging.info(" Wrote {}".format(config.out_path))
    print_checks(result.checks)
    failed = [check.name for check in result.checks if not check.passed]
    if failed:
        raise ConsistencyError(
            "{} consistency check(s) failed: {}".format(
                len(failed), ", ".join(failed)))
    return result

def main(args=None):
    logging.getLogger().setLevel(logging.INFO)
    parsed = experiment_argparser().parse_args(args)
    try:
        config = ExperimentConfig.from_args(parsed)
        logging.info(" {}".format(config.to_dict()))
        run_experiment(config)
    except (MacBoundError, OSError) as e:
        logging.error(" {}".format(e))
        return 1
    return 0

if __name__ == "__main__":
    sys.exit(main())
