from macbound.errors import DomainError


def largest_divisor_at_most(n, bound):
    """Largest divisor of n that does not exceed bound (bound >= 1)."""
    bound = min(int(bound), n)
    if bound < 1:
        raise DomainError("bound must be >= 1, got {}".format(bound))
    for d in range(bound, 0, -1):
        if n % d == 0:
            return d

def resolve_grid(config, default):
    """Explicit --n-grid if given, else the default grid cut at n_max."""
    if config.n_grid is not None:
        grid = sorted(set(config.n_grid))
    else:
        grid = [n for n in default if n <= config.n_max]
    if len(grid) == 0:
        raise DomainError("Empty n grid for {}.".format(config.experiment))
    return grid
