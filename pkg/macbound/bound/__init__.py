from .block_partition import BlockPartition
from .divergence_profile import DivergenceProfile
from .bound_report import BoundReport
from .mgf_envelope import MgfEnvelope, CatoniUnit, MaurerKl, Subgaussian
from .theorem1 import (theorem1_bound, catoni_rhs, gen_bound_catoni,
                       kl_direct_bound, gen_bound_kl_direct,
                       gen_bound_subgaussian, markov_high_prob_bound,
                       population_loss_upper)
from .mgf_check import (catoni_binomial_mgf, catoni_binomial_mgf_enumerated,
                        binomial_kl_mgf, binomial_log_pmf, maurer_sup,
                        MAX_ENUMERATION_M)
