import math

import ujson as json
from colorama import Fore, Style

import macbound


class ConsistencyCheck(object):
    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def to_dict(self):
        return {"name": self.name, "passed": self.passed,
                "detail": self.detail}

    def __repr__(self):
        return "ConsistencyCheck({}, passed={})".format(
            self.name, self.passed)


class ExperimentResult(object):
    """Rows of one experiment, the header echoed into the output file and
    the consistency checks run on the rows."""
    def __init__(self, config, rows, header=None, checks=None):
        self.config = config
        self.rows = rows
        self.header = make_header(config, header)
        self.checks = list(checks or [])

    @property
    def consistent(self):
        return all(check.passed for check in self.checks)


def make_header(config, extra=None):
    header = {"artifact": "macbound",
              "version": macbound.__version__,
              "experiment": config.experiment,
              "seed": config.seed,
              "config": config.to_dict()}
    if extra:
        header.update(extra)
    return header

def json_safe(value):
    """ujson refuses inf and nan; they are written as strings."""
    if isinstance(value, dict):
        return {k: json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        if math.isnan(value):
            return "nan"
        return "inf" if value > 0 else "-inf"
    if hasattr(value, "item"):
        return json_safe(value.item())
    return value

def write_csv(result, path):
    with path.open("w", newline="") as fp:
        fp.write("# " + json.dumps(json_safe(result.header), sort_keys=True))
        fp.write("\n")
        result.rows.to_csv(fp, index=False, float_format="%.17g",
                           lineterminator="\n")

def write_json(result, path):
    output = {"header": result.header,
              "rows": result.rows.to_dict("records"),
              "checks": [check.to_dict() for check in result.checks]}
    with path.open("w") as fp:
        fp.write(json.dumps(json_safe(output), sort_keys=True))
        fp.write("\n")

def write_result(result):
    path = result.config.out_path
    path.parent.mkdir(parents=True, exist_ok=True)
    if result.config.format == "csv":
        write_csv(result, path)
    else:
        write_json(result, path)
    return path

def print_checks(checks):
    for check in checks:
        if check.passed:
            status = Fore.GREEN + "PASS" + Style.RESET_ALL
        else:
            status = Fore.RED + "FAIL" + Style.RESET_ALL
        line = "{} {}".format(status, check.name)
        if check.detail:
            line += " ({})".format(check.detail)
        print(line)
