import os
import math
from contextlib import contextmanager

import numpy as np
import torch


THREADS_ENV_VAR = "MACBOUND_THREADS"


def chunk_seed(seed, chunk):
    """
    Seed for the generator of a single chunk of Monte Carlo trials. Derived
    from (seed, chunk) only, so every chunk draws the same numbers no matter
    which worker runs it. `seed` is an int or a sequence of ints, e.g.
    (seed, n) to give every row of an experiment its own stream.
    """
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(chunk,))
    return int(sequence.generate_state(1, dtype=np.uint32)[0])

def chunk_generator(seed, chunk):
    generator = torch.Generator()
    generator.manual_seed(chunk_seed(seed, chunk))
    return generator

def num_workers(requested=None):
    cap = os.environ.get(THREADS_ENV_VAR)
    workers = requested if requested is not None else os.cpu_count() or 1
    if cap is not None:
        workers = min(workers, int(cap))
    return max(1, workers)

@contextmanager
def single_threaded():
    # torch reductions may regroup sums across intra-op threads
    prev = torch.get_num_threads()
    torch.set_num_threads(1)
    try:
        yield
    finally:
        torch.set_num_threads(prev)

def is_finite(value):
    return not math.isinf(value)

def as_float64(x):
    return torch.as_tensor(x, dtype=torch.float64)

def scalar_or_tensor(result, *inputs):
    """Return a python float when every input was a python number."""
    if any(isinstance(x, torch.Tensor) for x in inputs):
        return result
    return float(result)
