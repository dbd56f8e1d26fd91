from hecke_cellular.tableaux.tableau import (
    CircledTableau,
    Tableau,
    constant_row_tableau,
    dual_tableau,
    max_rep_tableau,
    min_rep_tableau,
    perm_to_tableau,
    permutation_tableau,
    restrict_weight,
    row_reading_tableau,
    tableau_to_perm,
)
from hecke_cellular.tableaux.enumerate import FLAVORS, enumerate_tableaux, ribbons
from hecke_cellular.tableaux.counting import rsk_count_identity, shifted_knuth_count_identity
from hecke_cellular.symgroup.composition import is_refinement
