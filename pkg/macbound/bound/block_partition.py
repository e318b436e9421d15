from macbound.errors import BlockPartitionError


class BlockPartition(object):
    """
    Split of a sample of size n into J = n / m consecutive blocks of m
    samples each. Block j covers samples (j - 1) m + 1, ..., j m.
    """
    def __init__(self, n, m):
        n = int(n)
        m = int(m)
        if n < 1 or m < 1 or m > n:
            raise BlockPartitionError(
                "BlockPartition: need 1 <= m <= n, got n={} m={}".format(
                    n, m))
        if n % m != 0:
            raise BlockPartitionError(
                "BlockPartition: m={} does not divide n={}".format(m, n))
        self._n = n
        self._m = m

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def J(self):
        return self._n // self._m

    @property
    def num_blocks(self):
        return self.J

    def block_slice(self, j):
        """Zero-based slice of block j (1 <= j <= J)."""
        if not 1 <= j <= self.J:
            raise IndexError("block index {} outside 1..{}".format(j, self.J))
        return slice((j - 1) * self.m, j * self.m)

    def __eq__(self, other):
        return isinstance(other, BlockPartition) \
            and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return "BlockPartition(n={}, m={}, J={})".format(
            self.n, self.m, self.J)
