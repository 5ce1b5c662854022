"""Splitting loci of vector bundles on P^1: dominance and Quot-scheme numerics,
Littlewood-Richardson / Borel-Weil-Bott calculus and Hankel Fitting loci."""
from .errors import PreconditionError
from .partitions import (Partition, cauchy_wedge, conjugate, lr_coefficient,
                         schur_complex_terms, schur_of_double, tensor_schur)
from .splitting import (HNData, SplittingType, admissible_sets, admits_subsheaf,
                        dominates, dominates_via_flag, dominates_via_h1, eb,
                        ext1, flag_stratum_dim, gap, gp_type, h0, h1, hn_data,
                        hom, is_balanced, is_perfectly_balanced, is_tame,
                        stratum_codim, tangent_check, u)
from .bwb import BWBIndices, BWBOutcome, bwb_indices, bwb_mixed, bwb_quot_dual
from .quotvanish import (CohomologyReport, QuotEmbedding, koszul_summands,
                         lower_bound_check, stromme_embedding, taut_rank,
                         v_cohomology, verify_vanishing)
from .hankel import (HankelMatrix, HankelPoint, IntegerPolynomial,
                     fitting_generators, secant_point,
                     splitting_from_point)

__version__ = "0.1.0"
