from hecke_cellular.symgroup.perm import Perm, all_perms, length, reduced_word
from hecke_cellular.symgroup.composition import (
    Composition,
    compositions,
    dominance_le,
    dominance_lt,
    is_partition,
    is_refinement,
    is_strict_partition,
    normalize,
    parse_composition,
    partitions,
    strict_partitions,
)
from hecke_cellular.symgroup.cosets import (
    coset_decompose,
    double_coset_reps,
    hexagon_check,
    longest_rep,
    min_coset_reps,
    poincare_polynomial,
    young_subgroup,
)
