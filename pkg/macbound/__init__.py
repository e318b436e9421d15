__version__ = "1.0"

from . import errors
from . import util
from . import comparator
from . import bound
from . import metrics
from . import simulator
from . import scenario
from . import rates
from . import experiment
from . import cli
