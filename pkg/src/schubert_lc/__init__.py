"""Local cohomology of Schubert varieties in Grassmannians via Dyck patterns."""

from .cousin import (
    OracleBudget,
    bijection_pairs,
    build_graded_complex,
    euler_check,
    extension_set,
    gc_terms,
    koszul_decomposition,
    local_cohomology_formula,
    local_cohomology_oracle,
    rational_smoothness,
)
from .det import (
    DetInstance,
    IntPolynomial,
    det_multiplicity_closed_form,
    det_multiplicity_enumerated,
    gaussian_binomial,
    singular_locus_multiplicities,
)
from .dyck import A_set, DyckPath, DyckPattern, Z_set, enumerate_dyck_paths, enumerate_patterns, pattern_admissible
from .errors import *  # noqa: F401,F403
from .verma import highest_weight, partition_to_perm, perm_to_partition, verma_layer, verma_weight_filtration
from .young import Box, GrassContext, Partition, parse_partition, render, subpartitions

__version__ = "0.1.0"
