import time
import logging
from multiprocessing import Pool

from ignite.engine import Engine, Events
try:
    from ignite.engine.utils import _to_hours_mins_secs
except ImportError:
    from ignite._utils import _to_hours_mins_secs

from macbound.errors import DomainError
from macbound.util import chunk_generator, num_workers, single_threaded


CHUNK_SIZE = 10000


def chunk_sizes(trials, chunk_size=CHUNK_SIZE):
    if trials < 1:
        raise DomainError("trials must be >= 1, got {}".format(trials))
    full, rest = divmod(trials, chunk_size)
    return [chunk_size] * full + ([rest] if rest > 0 else [])

def _run_chunk(args):
    chunk_fn, seed, chunk, size = args
    with single_threaded():
        return chunk_fn(chunk_generator(seed, chunk), size)

def create_simulator(metrics):
    """
    Engine whose iterations are chunk summaries. The summaries are computed
    before they reach the engine, so the engine only feeds the metrics.
    """
    def _update(engine, summary):
        return summary

    simulator = Engine(_update)
    for name, metric in metrics.items():
        metric.attach(simulator, name)
    return simulator

def run_monte_carlo(chunk_fn, trials, seed, metrics, workers=None,
                    description="Simulating", verbose=True):
    """
    Runs `chunk_fn(generator, size)` over fixed-size chunks of trials and
    returns the computed metrics. Chunk c always draws from the generator
    seeded by (seed, c) and chunks are reduced in order, so the result does
    not depend on the number of workers.
    """
    sizes = chunk_sizes(trials)
    jobs = [(chunk_fn, seed, chunk, size)
            for chunk, size in enumerate(sizes)]
    workers = min(num_workers(workers), len(jobs))

    simulator = create_simulator(metrics)

    @simulator.on(Events.STARTED)
    def log_start(simulator):
        simulator.state.start_time = time.time()
        logging.info(" {}: {} trials in {} chunks on {} worker(s).".format(
            description, trials, len(jobs), workers))

    @simulator.on(Events.ITERATION_COMPLETED)
    def log_progress(simulator):
        if not verbose:
            return
        iterate = simulator.state.iteration
        msg = "{} {} / {}".format(description, iterate, len(jobs))
        if iterate < len(jobs):
            print(msg, end="\r", flush=True)
        else:
            print(" " * len(msg), end="\r", flush=True)

    @simulator.on(Events.COMPLETED)
    def log_time(simulator):
        hrs, mins, secs = _to_hours_mins_secs(
            time.time() - simulator.state.start_time)
        logging.info(" {}: done in {:02.0f}:{:02.0f}:{:02.0f}".format(
            description, hrs, mins, secs))

    if workers == 1:
        simulator.run(map(_run_chunk, jobs), max_epochs=1,
                      epoch_length=len(jobs))
    else:
        with Pool(workers) as pool:
            simulator.run(pool.imap(_run_chunk, jobs), max_epochs=1,
                          epoch_length=len(jobs))
    return simulator.state.metrics
