"""Partition identities P(A; n) = Q(B; n) from residue systems, with exact verification."""
from .arith import CrtParams, CrtSolution, crt_solve, gcd, mod_inverse
from .congruences import (CongruenceClaim, catalog, check_claim, convolution_check,
                          transfer_chain, transfer_crt)
from .identities import (ChainIdentityParams, CrtIdentityParams, IdentityInstance,
                         build_chain, build_crt, build_preset, finite_complement,
                         verify_polynomial)
from .partitions import (CountTable, brute_P, brute_Q, count_P, count_Q,
                         partition_p, verify_counts)
from .series import (CoefficientSeries, div_binomial, mul_binomial, one,
                     product_of_factors)
from .sets import (DifferenceClass, MultiplicitySet, ResidueClassUnion,
                   class_contains, expand_residues, mult_contains, verify_disjoint)

__version__ = "0.1.0"
