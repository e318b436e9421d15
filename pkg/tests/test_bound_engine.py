import unittest

import math

import torch
from macbound.bound import (BlockPartition, DivergenceProfile, BoundReport,
                            CatoniUnit, MaurerKl, Subgaussian,
                            theorem1_bound, catoni_rhs, gen_bound_catoni,
                            kl_direct_bound, gen_bound_kl_direct,
                            gen_bound_subgaussian, markov_high_prob_bound,
                            population_loss_upper, catoni_binomial_mgf,
                            catoni_binomial_mgf_enumerated, binomial_kl_mgf,
                            maurer_sup, MAX_ENUMERATION_M)
from macbound.comparator import binary_kl, Catoni
from macbound.errors import (BlockPartitionError, DomainError,
                             ProfileLengthError)


class TestBlockPartition(unittest.TestCase):

    def test_partition(self):
        part = BlockPartition(100, 4)
        self.assertEqual(part.J, 25)
        self.assertEqual(part.num_blocks, 25)
        self.assertEqual(part.block_slice(1), slice(0, 4))
        self.assertEqual(part.block_slice(25), slice(96, 100))
        self.assertEqual(BlockPartition(10, 10).J, 1)
        self.assertEqual(part, BlockPartition(100, 4))
        with self.assertRaises(IndexError):
            part.block_slice(26)

    def test_invalid_partition(self):
        with self.assertRaises(BlockPartitionError):
            BlockPartition(10, 3)
        with self.assertRaises(BlockPartitionError):
            BlockPartition(10, 11)
        with self.assertRaises(BlockPartitionError):
            BlockPartition(10, 0)

    def test_divergence_profile(self):
        profile = DivergenceProfile.uniform(.5, 4)
        self.assertEqual(len(profile), 4)
        self.assertEqual(profile.total, 2.)
        self.assertTrue(profile.finite)
        profile = DivergenceProfile([.1, math.inf])
        self.assertEqual(profile.total, math.inf)
        self.assertFalse(profile.finite)
        with self.assertRaises(DomainError):
            DivergenceProfile([.1, -.2])
        with self.assertRaises(DomainError):
            DivergenceProfile([math.nan])
        with self.assertRaises(ProfileLengthError):
            DivergenceProfile([])
        with self.assertRaises(ProfileLengthError):
            catoni_rhs(BlockPartition(10, 2), DivergenceProfile([.1] * 4))


class TestTheorem1(unittest.TestCase):

    def test_catoni_envelope(self):
        part = BlockPartition(100, 1)
        report = theorem1_bound(
            part, CatoniUnit(), 100., DivergenceProfile.uniform(.005, 100))
        self.assertTrue(isinstance(report, BoundReport))
        self.assertAlmostEqual(report.value, .005, places=15)
        self.assertTrue(report.finite)
        self.assertEqual(report.comparator, Catoni(1.))
        self.assertEqual(report.lambda_used, 100.)

    def test_infinite_divergence(self):
        profile = DivergenceProfile([.1, math.inf])
        for env in [CatoniUnit(), MaurerKl(), Subgaussian(1.)]:
            report = theorem1_bound(BlockPartition(4, 2), env, 1., profile)
            self.assertEqual(report.value, math.inf)
            self.assertFalse(report.finite)

    def test_subgaussian_envelope(self):
        report = theorem1_bound(
            BlockPartition(4, 2), Subgaussian(1.), 2.,
            DivergenceProfile([.1, .1]))
        self.assertAlmostEqual(report.value, .35, places=14)

    def test_lambda_domain(self):
        part = BlockPartition(100, 1)
        profile = DivergenceProfile.uniform(.005, 100)
        with self.assertRaises(DomainError):
            theorem1_bound(part, CatoniUnit(), 200., profile)
        with self.assertRaises(DomainError):
            theorem1_bound(part, MaurerKl(), 0., profile)
        # the subgaussian envelope has no upper limit on lambda
        theorem1_bound(part, Subgaussian(.25), 1e6, profile)

    def test_reduction_to_catoni_rhs(self):
        gen = torch.Generator().manual_seed(3)
        for n, m in [(10, 1), (12, 3), (64, 8)]:
            part = BlockPartition(n, m)
            profile = DivergenceProfile(
                torch.rand(part.J, generator=gen, dtype=torch.float64))
            report = theorem1_bound(part, CatoniUnit(), float(n), profile)
            self.assertEqual(report.value, catoni_rhs(part, profile))

    def test_catoni_bounds(self):
        part = BlockPartition(100, 1)
        profile = DivergenceProfile.uniform(1. / 198, 100)
        self.assertAlmostEqual(catoni_rhs(part, profile), 1. / 198,
                               places=15)
        self.assertTrue(
            abs(gen_bound_catoni(part, profile) - 0.0355335) < 1e-6)
        zero = DivergenceProfile.uniform(0., 100)
        self.assertEqual(catoni_rhs(part, zero), 0.)
        self.assertEqual(gen_bound_catoni(part, zero), 0.)
        infinite = DivergenceProfile([math.inf] + [0.] * 99)
        self.assertEqual(catoni_rhs(part, infinite), math.inf)
        self.assertEqual(gen_bound_catoni(part, infinite), math.inf)

    def test_kl_direct_bounds(self):
        zero1 = DivergenceProfile.uniform(0., 10)
        self.assertAlmostEqual(
            kl_direct_bound(BlockPartition(10, 1), zero1), math.log(2),
            places=15)
        zero4 = DivergenceProfile.uniform(0., 5)
        self.assertAlmostEqual(
            kl_direct_bound(BlockPartition(20, 4), zero4), math.log(4) / 4,
            places=15)
        part = BlockPartition(100, 1)
        profile = DivergenceProfile.uniform(1. / 198, 100)
        self.assertTrue(
            abs(kl_direct_bound(part, profile) - 0.698198) < 1e-6)
        self.assertTrue(
            abs(gen_bound_kl_direct(part, profile) - 0.4177911) < 1e-6)
        self.assertTrue(
            abs(gen_bound_kl_direct(BlockPartition(10, 1), zero1)
                - 0.416277) < 1e-6)
        infinite = DivergenceProfile([math.inf] + [0.] * 99)
        self.assertEqual(gen_bound_kl_direct(part, infinite), math.inf)

    def test_kl_direct_above_catoni(self):
        gen = torch.Generator().manual_seed(5)
        for n, m in [(10, 1), (10, 5), (36, 6), (100, 50)]:
            part = BlockPartition(n, m)
            profile = DivergenceProfile(
                torch.rand(part.J, generator=gen, dtype=torch.float64))
            self.assertTrue(
                gen_bound_catoni(part, profile)
                < gen_bound_kl_direct(part, profile))

    def test_subgaussian_bound(self):
        part = BlockPartition(100, 1)
        zero = DivergenceProfile.uniform(0., 100)
        self.assertEqual(gen_bound_subgaussian(part, 1., zero), (0., 0.))
        profile = DivergenceProfile.uniform(.005, 100)
        bound, lambda_star = gen_bound_subgaussian(part, .25, profile)
        self.assertAlmostEqual(bound, .05, places=14)
        self.assertAlmostEqual(lambda_star, 20., places=12)
        report = theorem1_bound(part, Subgaussian(.25), lambda_star, profile)
        self.assertTrue(abs(report.value - bound) < 1e-12)
        with self.assertRaises(DomainError):
            gen_bound_subgaussian(part, 0., profile)

    def test_subgaussian_lambda_is_optimal(self):
        gen = torch.Generator().manual_seed(13)
        for _ in range(200):
            n = int(torch.randint(2, 500, (1,), generator=gen))
            sigma_sq = float(torch.rand(1, generator=gen)) * 2 + .01
            total = float(torch.rand(1, generator=gen)) * 10 + 1e-3
            part = BlockPartition(n, 1)
            profile = DivergenceProfile.uniform(total / n, n)
            bound, lambda_star = gen_bound_subgaussian(
                part, sigma_sq, profile)
            env = Subgaussian(sigma_sq)
            grid = lambda_star * torch.logspace(-2, 2, 801,
                                                dtype=torch.float64)
            values = [theorem1_bound(part, env, float(lam), profile).value
                      for lam in grid]
            self.assertTrue(bound <= min(values) * (1 + 1e-3))
            self.assertTrue(min(values) <= bound * (1 + 1e-3))

    def test_monotone_in_divergence(self):
        part = BlockPartition(12, 3)
        low = DivergenceProfile([.1, .2, .3, .4])
        high = DivergenceProfile([.1, .25, .3, .4])
        for fn in [catoni_rhs, gen_bound_catoni, kl_direct_bound,
                   gen_bound_kl_direct]:
            self.assertTrue(fn(part, low) <= fn(part, high))
        self.assertTrue(gen_bound_subgaussian(part, .25, low)[0]
                        <= gen_bound_subgaussian(part, .25, high)[0])

    def test_markov_high_prob_bound(self):
        self.assertAlmostEqual(markov_high_prob_bound(.01, .1), .1,
                               places=15)
        self.assertEqual(markov_high_prob_bound(0., .3), 0.)
        self.assertEqual(markov_high_prob_bound(math.inf, .3), math.inf)
        with self.assertRaises(DomainError):
            markov_high_prob_bound(.01, 1.)

    def test_population_loss_upper(self):
        part = BlockPartition(100, 1)
        profile = DivergenceProfile.uniform(1. / 198, 100)
        upper = population_loss_upper(.2, part, profile)
        self.assertTrue(upper > .2)
        self.assertTrue(
            abs(binary_kl(.2, upper) - catoni_rhs(part, profile)) < 1e-10)


class TestMgfEnvelopes(unittest.TestCase):

    def test_envelopes(self):
        for m in [1, 4, 9]:
            self.assertEqual(CatoniUnit().phi(m, m), 1.)
            self.assertAlmostEqual(MaurerKl().phi(m, m), 2 * math.sqrt(m),
                                   places=12)
            self.assertEqual(Subgaussian(.25).log_phi(2., m), .5 / m)
        self.assertEqual(Subgaussian(1.).domain_bound(3), math.inf)
        self.assertFalse(CatoniUnit().in_domain(5., 4))
        with self.assertRaises(DomainError):
            MaurerKl().log_phi(5., 4)
        with self.assertRaises(DomainError):
            Subgaussian(-1.)

    def test_catoni_mgf_identity(self):
        for m in range(1, 21):
            for beta in [.1, .5, 1., 2., 5.]:
                for p in torch.linspace(0, 1, 21).tolist():
                    value = catoni_binomial_mgf(m, p, beta, float(m))
                    self.assertTrue(abs(value - 1.) < 1e-12)
        for beta in [.5, 3.]:
            self.assertEqual(catoni_binomial_mgf(1, 0., beta, .7), 1.)

    def test_catoni_mgf_enumeration(self):
        closed = catoni_binomial_mgf(5, .3, 1., 2.)
        enumerated = catoni_binomial_mgf_enumerated(5, .3, 1., 2.)
        self.assertTrue(0 < closed < math.inf)
        self.assertTrue(abs(closed - enumerated) < 1e-12)
        self.assertTrue(closed <= 1.)
        for m, p, beta, lam in [(3, .9, 5., 1.), (12, .05, .1, 7.),
                                (25, .5, 2., 25.)]:
            self.assertTrue(
                abs(catoni_binomial_mgf(m, p, beta, lam)
                    - catoni_binomial_mgf_enumerated(m, p, beta, lam))
                < 1e-12)
        self.assertEqual(MAX_ENUMERATION_M, 25)
        catoni_binomial_mgf_enumerated(MAX_ENUMERATION_M, .5, 1., 1.)
        with self.assertRaises(DomainError):
            catoni_binomial_mgf_enumerated(
                MAX_ENUMERATION_M + 1, .5, 1., 1.)

    def test_binomial_kl_mgf(self):
        self.assertAlmostEqual(binomial_kl_mgf(1, .5), 2., places=12)
        for m in [1, 5, 20]:
            self.assertAlmostEqual(binomial_kl_mgf(m, 0.), 1., places=12)
            self.assertAlmostEqual(binomial_kl_mgf(m, 1.), 1., places=12)
        self.assertTrue(binomial_kl_mgf(8, .3) <= 2 * math.sqrt(8))
        with self.assertRaises(DomainError):
            binomial_kl_mgf(26, .5)

    def test_maurer_bound(self):
        for m in range(1, 21):
            envelope = 2 * math.sqrt(m)
            for p in torch.linspace(0, 1, 101, dtype=torch.float64).tolist():
                self.assertTrue(
                    binomial_kl_mgf(m, p) <= envelope * (1 + 1e-12))
        self.assertTrue(abs(maurer_sup(1) - 2.) < 1e-12)

def suite():
    suite = unittest.TestSuite()
    suite.addTest(TestBlockPartition("test_partition"))
    suite.addTest(TestBlockPartition("test_invalid_partition"))
    suite.addTest(TestBlockPartition("test_divergence_profile"))
    suite.addTest(TestTheorem1("test_catoni_envelope"))
    suite.addTest(TestTheorem1("test_infinite_divergence"))
    suite.addTest(TestTheorem1("test_subgaussian_envelope"))
    suite.addTest(TestTheorem1("test_lambda_domain"))
    suite.addTest(TestTheorem1("test_reduction_to_catoni_rhs"))
    suite.addTest(TestTheorem1("test_catoni_bounds"))
    suite.addTest(TestTheorem1("test_kl_direct_bounds"))
    suite.addTest(TestTheorem1("test_kl_direct_above_catoni"))
    suite.addTest(TestTheorem1("test_subgaussian_bound"))
    suite.addTest(TestTheorem1("test_subgaussian_lambda_is_optimal"))
    suite.addTest(TestTheorem1("test_monotone_in_divergence"))
    suite.addTest(TestTheorem1("test_markov_high_prob_bound"))
    suite.addTest(TestTheorem1("test_population_loss_upper"))
    suite.addTest(TestMgfEnvelopes("test_envelopes"))
    suite.addTest(TestMgfEnvelopes("test_catoni_mgf_identity"))
    suite.addTest(TestMgfEnvelopes("test_catoni_mgf_enumeration"))
    suite.addTest(TestMgfEnvelopes("test_binomial_kl_mgf"))
    suite.addTest(TestMgfEnvelopes("test_maurer_bound"))
    return suite

if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    runner.run(suite())
