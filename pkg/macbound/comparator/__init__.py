from .functional import (catoni, binary_kl, difference, kl_sup_over_beta,
                         kl_inverse_upper, kl_inverse_lower, pinsker_upper)
from .comparator_kind import ComparatorKind, Catoni, BinaryKl, Difference
from .unit_interval import UnitInterval
