from .gaussian_example import (GaussianScenario, GaussianPosterior,
                               gaussian_kl, truncated_loss, population_loss,
                               expected_block_divergence, example_gen_bound,
                               example_profile_bound, mc_block_divergence,
                               mc_gen_error)
from .counterexample import (CounterexampleParams, params_from_n,
                             Hypothesis, AllZeros, OverfitComplement,
                             in_overfit_region, run_algorithm, empirical_loss,
                             population_loss_exact, divergence_block1_overfit,
                             divergence_block1_normal, block1_divergence,
                             divergence_blockj_upper, divergence_sum_upper,
                             rhs_bound, rhs_final_constant, overfit_gap_lower,
                             instantaneous_divergence_upper, mc_simulate)
