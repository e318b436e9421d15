import unittest

import os
import math
from functools import partial

import torch
from ignite.exceptions import NotComputableError
from macbound.metrics import MeanEstimate, OverfitStatistics
from macbound.simulator import run_monte_carlo, chunk_sizes, CHUNK_SIZE
from macbound.util import (chunk_seed, chunk_generator, num_workers,
                           THREADS_ENV_VAR)
from macbound.errors import DomainError


def uniform_chunk(generator, size, scale):
    values = scale * torch.rand(size, generator=generator,
                                dtype=torch.float64)
    return float(values.sum()), float((values ** 2).sum()), size


def one_overfit_chunk(generator, size):
    return size, 1, .9, .9, 0


class TestMonteCarlo(unittest.TestCase):

    def test_chunk_sizes(self):
        self.assertEqual(chunk_sizes(1), [1])
        self.assertEqual(chunk_sizes(CHUNK_SIZE), [CHUNK_SIZE])
        self.assertEqual(chunk_sizes(2 * CHUNK_SIZE + 5),
                         [CHUNK_SIZE, CHUNK_SIZE, 5])
        with self.assertRaises(DomainError):
            chunk_sizes(0)

    def test_chunk_seeds(self):
        self.assertEqual(chunk_seed(5, 0), chunk_seed(5, 0))
        self.assertNotEqual(chunk_seed(5, 0), chunk_seed(5, 1))
        self.assertNotEqual(chunk_seed(5, 0), chunk_seed(6, 0))
        self.assertNotEqual(chunk_seed((5, 10), 0), chunk_seed((5, 20), 0))
        first = torch.rand(4, generator=chunk_generator(5, 3))
        second = torch.rand(4, generator=chunk_generator(5, 3))
        self.assertTrue(torch.all(first == second))

    def test_num_workers(self):
        previous = os.environ.pop(THREADS_ENV_VAR, None)
        try:
            self.assertEqual(num_workers(3), 3)
            os.environ[THREADS_ENV_VAR] = "2"
            self.assertEqual(num_workers(3), 2)
            self.assertEqual(num_workers(1), 1)
            os.environ[THREADS_ENV_VAR] = "0"
            self.assertEqual(num_workers(4), 1)
        finally:
            os.environ.pop(THREADS_ENV_VAR, None)
            if previous is not None:
                os.environ[THREADS_ENV_VAR] = previous

    def test_mean_estimate(self):
        metric = MeanEstimate()
        metric.reset()
        with self.assertRaises(NotComputableError):
            metric.compute()
        metric.update((6., 14., 3))
        metric.update((4., 16., 1))
        mean, std_error = metric.compute()
        # values 1, 2, 3 and 4
        self.assertEqual(mean, 2.5)
        self.assertAlmostEqual(std_error, math.sqrt(5. / 3. / 4.),
                               places=14)
        metric.reset()
        metric.update((2., 4., 1))
        self.assertTrue(math.isnan(metric.compute()[1]))

    def test_overfit_statistics(self):
        metric = OverfitStatistics()
        metric.reset()
        metric.update((10, 2, 1.8, .85, 0))
        metric.update((10, 0, 0., math.inf, 0))
        report = metric.compute()
        self.assertEqual(report.trials, 20)
        self.assertEqual(report.overfit_frequency, .1)
        self.assertEqual(report.conditional_gap_min, .85)
        self.assertAlmostEqual(report.conditional_gap_mean, .9, places=15)
        self.assertAlmostEqual(report.gen_mean, .09, places=15)

    def test_overfit_statistics_on_simulator(self):
        report = run_monte_carlo(
            one_overfit_chunk, 2 * CHUNK_SIZE + 5, 2,
            {"overfit": OverfitStatistics()}, workers=1,
            verbose=False)["overfit"]
        self.assertEqual(report.trials, 2 * CHUNK_SIZE + 5)
        self.assertEqual(report.overfit_trials, 3)
        self.assertEqual(report.conditional_gap_min, .9)
        self.assertAlmostEqual(report.conditional_gap_mean, .9, places=15)
        self.assertEqual(report.gap_violations, 0)

    def test_run_monte_carlo(self):
        chunk_fn = partial(uniform_chunk, scale=2.)
        mean, std_error = run_monte_carlo(
            chunk_fn, 50000, 1, {"value": MeanEstimate()}, workers=1,
            verbose=False)["value"]
        self.assertTrue(abs(mean - 1.) <= 4 * std_error)
        self.assertTrue(
            abs(std_error - math.sqrt(1. / 3. / 50000)) < 1e-4)

    def test_worker_count_does_not_change_results(self):
        chunk_fn = partial(uniform_chunk, scale=1.)
        results = [
            run_monte_carlo(chunk_fn, 45001, 9, {"value": MeanEstimate()},
                            workers=workers, verbose=False)["value"]
            for workers in [1, 2, 4]]
        self.assertEqual(results[0], results[1])
        self.assertEqual(results[0], results[2])

def suite():
    suite = unittest.TestSuite()
    suite.addTest(TestMonteCarlo("test_chunk_sizes"))
    suite.addTest(TestMonteCarlo("test_chunk_seeds"))
    suite.addTest(TestMonteCarlo("test_num_workers"))
    suite.addTest(TestMonteCarlo("test_mean_estimate"))
    suite.addTest(TestMonteCarlo("test_overfit_statistics"))
    suite.addTest(TestMonteCarlo("test_overfit_statistics_on_simulator"))
    suite.addTest(TestMonteCarlo("test_run_monte_carlo"))
    suite.addTest(
        TestMonteCarlo("test_worker_count_does_not_change_results"))
    return suite

if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    runner.run(suite())
