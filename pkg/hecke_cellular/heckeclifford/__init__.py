from hecke_cellular.heckeclifford.clifford import CliffordAlgebra, CliffordWord, clifford_algebra, merge_words
from hecke_cellular.heckeclifford.element import (
    HCElement,
    anti_homomorphism_check,
    from_t_first,
    gamma_lemma_check,
    gamma_left,
    gamma_realization_check,
    gamma_right,
    hc_multiply,
    hc_parabolic_generator,
    span_failure_witness,
    to_t_first,
)
from hecke_cellular.heckeclifford.homspace import SuperHomSpaceElement
from hecke_cellular.heckeclifford.parabolic import SuperParabolicModule, circled_generator_check, super_parabolic_module
from hecke_cellular.heckeclifford.products import (
    circ_product_hc_check,
    circled_basis_element,
    gamma_action,
    gamma_balance_check,
    super_circ_product,
    super_parabolic_element,
    super_to_hc,
)
from hecke_cellular.heckeclifford.specht import (
    SuperSpechtQuotient,
    circle_move_check,
    closed_form_check,
    queer_schur_count,
    super_specht_quotient,
    super_top_row_check,
)
from hecke_cellular.heckeclifford.ideals import (
    GammaAlgebra,
    IdealData,
    K_ideal,
    SuperClassification,
    count_super_simples,
    delta_ideal,
    delta_two_sided_check,
    k_inclusions_check,
    theta_ideal,
    trace_ideal_Jc,
)
