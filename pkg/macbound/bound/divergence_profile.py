import math

import torch

from macbound.errors import DomainError, ProfileLengthError


class DivergenceProfile(object):
    """
    Expected divergences D_j = E KL(P_{W|S_j} || Q_W), one per block.
    Entries are nonnegative and may be +inf.
    """
    def __init__(self, per_block):
        per_block = torch.as_tensor(per_block, dtype=torch.float64).view(-1)
        if per_block.numel() == 0:
            raise ProfileLengthError("DivergenceProfile needs >= 1 block.")
        if torch.isnan(per_block).any() or per_block.lt(0).any():
            raise DomainError(
                "DivergenceProfile entries must be >= 0 or +inf.")
        self._per_block = per_block

    @staticmethod
    def uniform(value, num_blocks):
        return DivergenceProfile(
            torch.full((num_blocks,), float(value), dtype=torch.float64))

    @property
    def per_block(self):
        return self._per_block

    @property
    def total(self):
        if torch.isinf(self._per_block).any():
            return math.inf
        return float(self._per_block.sum())

    @property
    def finite(self):
        return not math.isinf(self.total)

    def __len__(self):
        return self._per_block.numel()

    def check_partition(self, part):
        if len(self) != part.J:
            raise ProfileLengthError(
                "Profile has {} entries but the partition has J={} "
                "blocks.".format(len(self), part.J))

    def __repr__(self):
        return "DivergenceProfile(J={}, total={})".format(
            len(self), self.total)
