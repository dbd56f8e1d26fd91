from hecke_cellular.coefficients.laurent import LaurentPolynomial
from hecke_cellular.coefficients.rings import (
    CoefficientRing,
    RingDescriptor,
    build_ring,
    generic_q_ring,
    generic_ring,
    parse_ring,
)
from hecke_cellular.coefficients.qnumbers import (
    even_ratio_power,
    q2_characteristic,
    q2_integer,
    q_binomial,
    q_characteristic,
    q_factorial,
    q_integer,
    q_multinomial,
)
