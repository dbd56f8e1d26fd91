from hecke_cellular.cellcheck.generic.base_checker import BaseChecker
from hecke_cellular.cellcheck.instance import (
    FilteredAlgebraInstance,
    MoritaData,
    build_instance,
    drop_ideal_vector,
    drop_module_vector,
    flip_rho,
    hc_instance,
    hecke_instance,
    refine_to_total_order,
    two_sided_closure,
)
from hecke_cellular.cellcheck.axioms import (
    IdealFilterChecker,
    MoritaContextChecker,
    RigidityChecker,
    StandardBasisChecker,
    verify_all,
    verify_ideal_filter,
    verify_morita_context,
    verify_rigidity,
    verify_standard_basis,
)
from hecke_cellular.cellcheck.radical import (
    count_simples_by_radical,
    radical_basis,
    radical_cross_check,
    structure_constants,
)
