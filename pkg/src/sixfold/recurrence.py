"""The analytic side: windowed series via recurrence rules, the two
vanishing combinations J and K, the three auxiliary polynomials p1..p3,
fourth-order residuals and the truncated generating product.

The recurrence rules and the auxiliary polynomials are kept as plain data
tables.  That makes the transcription reviewable term by term and lets the
verification harness inject single-term mutations to confirm the suites
actually notice a wrong coefficient or exponent.
"""

from __future__ import annotations

import random

from .poly import ONE, TriPoly, ZERO, monomial, one_minus_q

# One rule term (coeff, e_a, e_b, q_slope, q_offset, dn, jref) contributes
#   coeff * a^e_a * b^e_b * q^(q_slope*n + q_offset) * S(n - dn, jref).
# The rule at index j defines S(n, j) as S(n, j-1) plus its terms; rule 0
# has no predecessor and consists of its single term.
RuleTerm = tuple[int, int, int, int, int, int, int]

REC_RULES: tuple[tuple[RuleTerm, ...], ...] = (
    ((1, 0, 0, 0, 0, 1, 15),),
    (
        (1, 1, 0, 6, 1, 1, 11),
        (-1, 1, 0, 6, 1, 1, 9),
        (1, 1, 0, 6, 1, 1, 5),
        (-1, 3, 3, 24, -12, 3, 9),
    ),
    (
        (1, 1, 0, 6, 2, 1, 12),
        (-1, 1, 0, 6, 2, 1, 9),
        (1, 1, 0, 6, 2, 1, 8),
    ),
    ((1, 2, 0, 12, 3, 1, 3),),
    ((1, 0, 1, 6, 4, 1, 13),),
    ((1, 1, 1, 12, 5, 1, 5),),
    ((1, 0, 1, 6, 5, 1, 14),),
    ((1, 1, 1, 12, 6, 1, 5),),
    ((1, 1, 1, 12, 7, 1, 8),),
    ((1, 0, 2, 12, 9, 1, 9),),
    ((1, 1, 1, 6, 6, 1, 14),),
    ((1, 2, 1, 12, 7, 1, 5),),
    ((1, 2, 1, 12, 8, 1, 8),),
    ((1, 1, 2, 12, 10, 1, 9),),
    ((1, 1, 2, 12, 11, 1, 9),),
    ((1, 2, 2, 12, 12, 1, 9),),
)


class SeriesMemo:
    """Memoized table of windowed series values.

    The cache is reference-transparent: an entry is only ever written with
    the value derived from the rules, so concurrent duplicate fills are
    harmless.  A memo built from mutated rules must not be shared with
    pristine ones.
    """

    def __init__(self, rules: tuple[tuple[RuleTerm, ...], ...] = REC_RULES):
        self.rules = rules
        self._table: dict[tuple[int, int], TriPoly] = {}

    def s(self, n: int, j: int) -> TriPoly:
        """S(n, j) per the recurrence rules; 1 at n == -1, 0 below."""
        if not 0 <= j <= 15:
            raise ValueError(f"window class must be in 0..15, got {j}")
        if n == -1:
            return ONE
        if n < -1:
            return ZERO
        key = (n, j)
        got = self._table.get(key)
        if got is not None:
            return got
        acc = self.s(n, j - 1) if j else ZERO
        for coeff, e_a, e_b, slope, offset, dn, jref in self.rules[j]:
            series = self.s(n - dn, jref)
            if series:
                acc = acc + monomial(coeff, e_a, e_b, slope * n + offset) * series
        self._table[key] = acc
        return acc


_DEFAULT_MEMO = SeriesMemo()


def s_rec(n: int, j: int, memo: SeriesMemo | None = None) -> TriPoly:
    """S(n, j) from the recurrence rules (shared default memo when none given)."""
    return (memo or _DEFAULT_MEMO).s(n, j)


# ------------------------------------------------------ auxiliary p1..p3

# Auxiliary polynomial term: (coeff, e_a, e_b, q_slope, q_offset).
PolyTerm = tuple[int, int, int, int, int]

P1_TERMS: tuple[PolyTerm, ...] = (
    (1, 0, 0, 0, 0),
    (1, 1, 0, 6, -5),
    (1, 1, 0, 6, -4),
    (1, 0, 1, 6, -2),
    (1, 0, 1, 6, -1),
    (1, 1, 1, 6, 0),
    (2, 1, 1, 12, -1),
    (3, 1, 1, 12, 0),
    (1, 1, 0, 6, 2),
    (2, 2, 0, 12, -3),
    (1, 2, 0, 12, -2),
    (2, 1, 1, 12, 1),
    (1, 2, 1, 12, 2),
    (1, 0, 1, 6, 4),
    (1, 0, 2, 12, 2),
    (2, 0, 2, 12, 3),
    (1, 1, 2, 12, 4),
    (1, 0, 1, 6, 5),
    (1, 0, 2, 12, 4),
    (1, 1, 2, 12, 5),
    (1, 2, 0, 12, 3),
    (2, 2, 1, 18, 1),
    (2, 2, 1, 18, 2),
    (1, 1, 1, 12, 5),
    (1, 2, 1, 18, 0),
    (1, 1, 2, 18, 3),
    (1, 2, 0, 12, -4),
    (2, 1, 2, 18, 4),
    (1, 1, 1, 12, 6),
    (2, 1, 2, 18, 5),
    (1, 1, 1, 12, 7),
    (1, 2, 1, 18, 3),
    (1, 1, 2, 18, 6),
    (1, 0, 2, 12, 9),
    (1, 3, 0, 18, -2),
    (1, 3, 0, 18, -1),
    (1, 0, 3, 18, 7),
    (1, 0, 3, 18, 8),
    (1, 2, 1, 12, 1),
    (1, 1, 0, 6, 1),
)

P2_TERMS: tuple[PolyTerm, ...] = (
    (1, 2, 1, 12, -5),
    (1, 2, 1, 12, -4),
    (1, 1, 2, 12, -2),
    (1, 1, 2, 12, -1),
    (1, 2, 2, 12, 0),
    (1, 3, 1, 18, -4),
    (1, 3, 1, 18, -3),
    (1, 3, 1, 18, -2),
    (3, 2, 2, 18, 0),
    (1, 2, 2, 18, -1),
    (1, 1, 3, 18, 2),
    (1, 1, 3, 18, 3),
    (1, 2, 2, 18, 1),
    (1, 1, 3, 18, 4),
    (1, 3, 1, 18, -10),
    (1, 2, 2, 18, -7),
    (3, 2, 2, 18, -6),
    (1, 3, 2, 18, -5),
    (1, 4, 1, 24, -9),
    (1, 4, 1, 24, -8),
    (1, 4, 1, 24, -7),
    (3, 3, 2, 24, -5),
    (1, 3, 2, 24, -6),
    (3, 2, 3, 24, -2),
    (3, 3, 2, 24, -4),
    (3, 2, 3, 24, -1),
    (1, 3, 1, 18, -9),
    (1, 3, 1, 18, -8),
    (1, 2, 2, 18, -5),
    (1, 3, 2, 18, -4),
    (1, 2, 3, 24, 0),
    (1, 1, 3, 18, -4),
    (1, 1, 4, 24, 0),
    (1, 3, 2, 24, -3),
    (1, 1, 4, 24, 2),
    (1, 1, 3, 18, -2),
    (1, 1, 4, 24, 1),
    (1, 1, 4, 24, 3),
    (1, 4, 1, 24, -6),
    (1, 1, 3, 18, -3),
    (1, 2, 3, 18, -2),
    (1, 2, 3, 18, -1),
    (1, 2, 3, 24, -3),
)

P3_TERMS: tuple[PolyTerm, ...] = (
    (-1, 3, 3, 24, -12),
    (-1, 3, 3, 18, -12),
    (-1, 4, 3, 24, -11),
    (-1, 4, 3, 24, -10),
    (-1, 3, 4, 24, -8),
    (-1, 3, 4, 24, -7),
    (2, 4, 3, 30, -17),
    (2, 4, 3, 30, -16),
    (2, 3, 4, 30, -14),
    (2, 3, 4, 30, -13),
    (1, 4, 2, 24, -21),
    (1, 5, 2, 30, -20),
    (1, 3, 3, 24, -19),
    (1, 5, 2, 30, -19),
    (1, 4, 3, 30, -18),
    (1, 3, 4, 30, -15),
    (1, 3, 3, 24, -18),
    (1, 3, 3, 24, -17),
    (1, 4, 3, 30, -15),
    (1, 3, 4, 30, -12),
    (1, 2, 5, 30, -11),
    (1, 2, 5, 30, -10),
    (1, 2, 4, 24, -15),
)

PTables = tuple[tuple[PolyTerm, ...], ...]
DEFAULT_P_TABLES: PTables = (P1_TERMS, P2_TERMS, P3_TERMS)


def p_poly(i: int, n: int, tables: PTables = DEFAULT_P_TABLES) -> TriPoly:
    """Auxiliary polynomial p_i (i in 1..3) evaluated at level n.

    q exponents are q_slope*n + q_offset and may be negative at small n;
    terms whose exponent triples coincide at a given n are merged.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"i must be 1, 2 or 3, got {i}")
    acc = ZERO
    for coeff, e_a, e_b, slope, offset in tables[i - 1]:
        acc = acc + monomial(coeff, e_a, e_b, slope * n + offset)
    return acc


# --------------------------------------------------------- fixed brackets


def _window_bracket(base: int) -> TriPoly:
    """1 + a*q^(base+1) + a*q^(base+2) + b*q^(base+4) + b*q^(base+5)."""
    return (
        ONE
        + monomial(1, 1, 0, base + 1)
        + monomial(1, 1, 0, base + 2)
        + monomial(1, 0, 1, base + 4)
        + monomial(1, 0, 1, base + 5)
    )


def _j_bracket(n: int) -> TriPoly:
    six = 6 * n
    return (
        ONE
        + monomial(1, 1, 0, six + 1)
        + monomial(1, 1, 0, six + 2)
        + monomial(1, 2, 0, six + 3)
        + monomial(1, 0, 1, six + 4)
        + monomial(1, 0, 1, six + 5)
        + monomial(1, 1, 1, six + 5)
        + monomial(1, 1, 1, six + 6)
        + monomial(1, 1, 1, six + 7)
        + monomial(1, 0, 2, six + 9)
    )


_J_INNER = (
    monomial(1, 2, 0, 0)
    + monomial(1, 1, 1, 2)
    + monomial(1, 1, 1, 3)
    + monomial(1, 1, 1, 4)
    + monomial(1, 2, 1, 4)
    + monomial(1, 2, 1, 5)
    + monomial(1, 0, 2, 6)
    + monomial(1, 1, 2, 7)
    + monomial(1, 1, 2, 8)
)

_K_INNER = (
    ONE
    + monomial(1, 1, 0, 1)
    + monomial(1, 1, 0, 2)
    + monomial(1, 0, 1, 4)
    + monomial(1, 0, 1, 5)
    + monomial(1, 1, 1, 6)
)

_LEMMA4_FACTORS = (
    (ONE + monomial(1, 1, 0, 1))
    * (ONE + monomial(1, 1, 0, 2))
    * (ONE + monomial(1, 0, 1, 4))
    * (ONE + monomial(1, 0, 1, 5))
)


# ------------------------------------------------- vanishing combinations


def J_poly(n: int, memo: SeriesMemo | None = None) -> TriPoly:
    """First vanishing combination of series values; zero for every n >= 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = memo or _DEFAULT_MEMO
    six = 6 * n
    out = m.s(n, 9)
    out = out - one_minus_q(six) * _window_bracket(six) * m.s(n - 1, 15)
    out = out - monomial(1, 0, 0, six) * _j_bracket(n) * m.s(n - 1, 9)
    s2 = m.s(n - 2, 9)
    if s2:
        out = out + one_minus_q(six) * monomial(1, 1, 1, 18 * n - 3) * _J_INNER * s2
    s3 = m.s(n - 3, 9)
    if s3:
        out = out + (
            monomial(1, 3, 3, 24 * n - 12) * one_minus_q(six) * one_minus_q(six - 6) * s3
        )
    return out


def K_poly(n: int, memo: SeriesMemo | None = None) -> TriPoly:
    """Second vanishing combination of series values; zero for every n >= 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = memo or _DEFAULT_MEMO
    six = 6 * n
    out = m.s(n, 9) - m.s(n, 15)
    out = out + monomial(1, 1, 1, six + 6) * one_minus_q(six) * m.s(n - 1, 15)
    out = out + monomial(1, 1, 1, 12 * n + 6) * _K_INNER * m.s(n - 1, 9)
    s2 = m.s(n - 2, 9)
    if s2:
        out = out - monomial(1, 3, 3, 18 * n + 6) * one_minus_q(six) * s2
    return out


def link_residual(n: int, memo: SeriesMemo | None = None) -> TriPoly:
    """Combination of J(n), K(n) and K(n+1) that vanishes identically,
    independently of J and K themselves being zero."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = memo or _DEFAULT_MEMO
    bracket = (
        ONE
        + monomial(1, 1, 0, 6 * n + 2)
        + monomial(1, 0, 1, 6 * n + 4)
        + monomial(1, 0, 1, 6 * n + 5)
    )
    return (
        monomial(1, 2, 1, 12 * n + 19) * J_poly(n, m)
        - K_poly(n + 1, m)
        + monomial(1, 1, 0, 6 * n + 13) * bracket * K_poly(n, m)
    )


# ------------------------------------------------- fourth-order residuals


def lemma2_residual(
    n: int, memo: SeriesMemo | None = None, tables: PTables = DEFAULT_P_TABLES
) -> TriPoly:
    """LHS minus RHS of the fourth-order recurrence for the class-9 series."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = memo or _DEFAULT_MEMO
    six = 6 * n
    lhs = _window_bracket(six - 6) * m.s(n, 9)
    rhs = p_poly(1, n, tables) * m.s(n - 1, 9)
    s2 = m.s(n - 2, 9)
    if s2:
        rhs = rhs + one_minus_q(six) * p_poly(2, n, tables) * s2
    s3 = m.s(n - 3, 9)
    if s3:
        rhs = rhs + p_poly(3, n, tables) * one_minus_q(six) * one_minus_q(six - 6) * s3
    s4 = m.s(n - 4, 9)
    if s4:
        rhs = rhs + (
            monomial(1, 4, 4, 30 * n - 36)
            * one_minus_q(six)
            * one_minus_q(six - 6)
            * one_minus_q(six - 12)
            * _window_bracket(six)
            * s4
        )
    return lhs - rhs


def lemma3_residual(
    n: int, memo: SeriesMemo | None = None, tables: PTables = DEFAULT_P_TABLES
) -> TriPoly:
    """LHS minus RHS of the fourth-order recurrence for the class-15 series.

    The auxiliary polynomials enter at level n-1 with a and b both shifted
    by q^6.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = memo or _DEFAULT_MEMO
    six = 6 * n
    lhs = _window_bracket(six - 6) * m.s(n, 15)
    rhs = p_poly(1, n - 1, tables).shift(6, 6) * m.s(n - 1, 15)
    s2 = m.s(n - 2, 15)
    if s2:
        rhs = rhs + one_minus_q(six - 6) * p_poly(2, n - 1, tables).shift(6, 6) * s2
    s3 = m.s(n - 3, 15)
    if s3:
        rhs = rhs + (
            one_minus_q(six - 6)
            * one_minus_q(six - 12)
            * p_poly(3, n - 1, tables).shift(6, 6)
            * s3
        )
    s4 = m.s(n - 4, 15)
    if s4:
        rhs = rhs + (
            monomial(1, 4, 4, 30 * n - 18)
            * _window_bracket(six)
            * one_minus_q(six - 6)
            * one_minus_q(six - 12)
            * one_minus_q(six - 18)
            * s4
        )
    return lhs - rhs


def lemma4_residual(n: int, memo: SeriesMemo | None = None) -> TriPoly:
    """Class-15 series minus its product form over the shifted class-9 series."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = memo or _DEFAULT_MEMO
    return m.s(n, 15) - _LEMMA4_FACTORS * m.s(n - 1, 9).shift(6, 6)


# ------------------------------------------------------- truncated product


def product_truncated(q_max: int, extra_windows: int = 0) -> TriPoly:
    """Product of the four side-A generating factors per window, truncated
    at q exponent q_max.

    Only windows whose smallest factor exponent 6n+1 is <= q_max can
    contribute; extra_windows multiplies in that many further windows
    anyway, which the truncation-stability suite uses to confirm they
    change nothing.
    """
    if q_max < 0:
        raise ValueError(f"q_max must be >= 0, got {q_max}")
    windows = (q_max - 1) // 6 + 1 if q_max else 0
    out = ONE
    for n in range(windows + extra_windows):
        six = 6 * n
        for e_a, e_b, e in ((1, 0, six + 1), (1, 0, six + 2), (0, 1, six + 4), (0, 1, six + 5)):
            out = (out * (ONE + monomial(1, e_a, e_b, e))).truncate(q_max)
    return out


# ------------------------------------------------------ mutation injection


def mutate_p_tables(tables: PTables, rng: random.Random) -> tuple[PTables, str]:
    """Copy of `tables` with one term's coefficient changed by +/-1."""
    i = rng.randrange(len(tables))
    terms = list(tables[i])
    t = rng.randrange(len(terms))
    coeff, e_a, e_b, slope, offset = terms[t]
    delta = rng.choice((-1, 1))
    terms[t] = (coeff + delta, e_a, e_b, slope, offset)
    out = list(tables)
    out[i] = tuple(terms)
    return tuple(out), f"p{i + 1} term {t}: coeff {coeff} -> {coeff + delta}"


def mutate_rec_rules(
    rules: tuple[tuple[RuleTerm, ...], ...], rng: random.Random
) -> tuple[tuple[tuple[RuleTerm, ...], ...], str]:
    """Copy of `rules` with one term's constant q offset changed by +/-1."""
    j = rng.randrange(len(rules))
    terms = list(rules[j])
    t = rng.randrange(len(terms))
    coeff, e_a, e_b, slope, offset, dn, jref = terms[t]
    delta = rng.choice((-1, 1))
    terms[t] = (coeff, e_a, e_b, slope, offset + delta, dn, jref)
    out = list(rules)
    out[j] = tuple(terms)
    return tuple(out), f"rule {j} term {t}: q offset {offset} -> {offset + delta}"
