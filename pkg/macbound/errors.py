class MacBoundError(ValueError):
    pass


class BlockPartitionError(MacBoundError):
    """Block size does not split the sample into whole blocks."""
    pass


class DomainError(MacBoundError):
    pass


class ProfileLengthError(MacBoundError):
    pass


class ConsistencyError(MacBoundError):
    """A computed table violates one of the inequalities it must satisfy."""
    pass
