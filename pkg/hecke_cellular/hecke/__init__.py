from hecke_cellular.hecke.element import (
    HeckeElement,
    anti_involution,
    group_algebra_multiply,
    hecke_invert_Tw,
    hecke_multiply,
    parabolic_generator,
)
from hecke_cellular.hecke.homspace import (
    HomSpaceElement,
    canonical_decomposition,
    circ_product,
    decompose,
    homspace_element,
    permutation_lemma_check,
    refinement_left_check,
    refinement_right_check,
)
from hecke_cellular.hecke.parabolic import (
    ParabolicModule,
    generator_action,
    generator_action_check,
    is_in_parabolic_module,
    parabolic_module,
)
from hecke_cellular.hecke.specht import SpechtQuotient, layer_from_products, specht_quotient
from hecke_cellular.hecke.lemmas import braiding_hexagon_check, local_transform_check
from hecke_cellular.hecke.classify import (
    Classification,
    GramMatrix,
    TraceIdeal,
    count_simples,
    e_restricted,
    f_lambda,
    gram_matrix,
    trace_ideal_J,
)
