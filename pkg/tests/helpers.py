"""Shared test data: reference displays and small builders."""

from sixfold.poly import ZERO, TriPoly, monomial


def poly_of(terms) -> TriPoly:
    """Build a polynomial from (coeff, e_a, e_b, e_q) tuples."""
    acc = ZERO
    for c, ea, eb, eq in terms:
        acc = acc + monomial(c, ea, eb, eq)
    return acc


# Reference display of the level-0 class-15 series (15 terms), equal to
# (1+aq)(1+aq^2)(1+bq^4)(1+bq^5).
DISPLAY_S0_15 = poly_of(
    [
        (1, 0, 0, 0),
        (1, 1, 0, 1),
        (1, 1, 0, 2),
        (1, 2, 0, 3),
        (1, 0, 1, 4),
        (1, 1, 1, 5),
        (1, 0, 1, 5),
        (2, 1, 1, 6),
        (1, 2, 1, 7),
        (1, 1, 1, 7),
        (1, 2, 1, 8),
        (1, 0, 2, 9),
        (1, 1, 2, 10),
        (1, 1, 2, 11),
        (1, 2, 2, 12),
    ]
)

# Commonly quoted 9-term display of the level-0 class-9 series.  It is
# short by one term: the b^2*q^9 partition {5, 4} is valid, and the J(0)=0
# identity independently forces it.  See the README identity catalogue.
DISPLAY_S0_9_SHORT = poly_of(
    [
        (1, 0, 0, 0),
        (1, 1, 0, 1),
        (1, 1, 0, 2),
        (1, 2, 0, 3),
        (1, 0, 1, 4),
        (1, 1, 1, 5),
        (1, 0, 1, 5),
        (1, 1, 1, 6),
        (1, 1, 1, 7),
    ]
)

B2_Q9 = monomial(1, 0, 2, 9)
