from .polynomial import (
    BigRational,
    LaurentPolynomial,
    ONE,
    Q,
    ZERO,
    add,
    eval_at,
    from_json,
    monomial,
    mul,
    parse,
    poly_product,
    poly_sum,
    scale,
    shift,
    substitute_power,
    to_json,
    to_string,
)
from .qanalogs import (
    bracket,
    bracket_product,
    q_binomial,
    q_binomial_composition_oracle,
    q_binomial_monotone_oracle,
    q_factorial,
)
