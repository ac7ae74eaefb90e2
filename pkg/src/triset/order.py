"""Comparison regimes for elimination: rank, set rank, and support refinement."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .poly import Polynomial, _revkey


class RankOutcome(Enum):
    LOWER = -1
    SAME = 0
    HIGHER = 1


class RefineOutcome(Enum):
    LESS = -1
    EQUIVALENT = 0
    GREATER = 1


def _rank_key(p: Polynomial):
    # (class, leading degree); constants compare as (0, 0).
    c = p.poly_class
    return (c, p.leading_degree if c else 0)


def rank_compare(p: Polynomial, q: Polynomial) -> RankOutcome:
    """Rank order: first by class, then by leading degree."""
    if p.is_zero or q.is_zero:
        raise ValueError("rank is undefined for the zero polynomial")
    a, b = _rank_key(p), _rank_key(q)
    if a < b:
        return RankOutcome.LOWER
    if a > b:
        return RankOutcome.HIGHER
    return RankOutcome.SAME


def rank_compare_sets(
    t: Sequence[Polynomial], s: Sequence[Polynomial]
) -> RankOutcome:
    """Rank order on triangular sets.

    Element-wise comparison along the common prefix decides first; with an
    all-same prefix the strictly longer set ranks lower.
    """
    for ti, si in zip(t, s):
        c = rank_compare(ti, si)
        if c is not RankOutcome.SAME:
            return c
    if len(t) > len(s):
        return RankOutcome.LOWER
    if len(t) < len(s):
        return RankOutcome.HIGHER
    return RankOutcome.SAME


def refine_compare(p: Polynomial, q: Polynomial) -> RefineOutcome:
    """Refinement order: lex comparison of term supports, head first.

    Coefficients are ignored; two polynomials with the same set of power
    products are equivalent.  The zero polynomial is below everything else.
    """
    sa = p.sorted_terms()
    sb = q.sorted_terms()
    for (ea, _), (eb, _) in zip(sa, sb):
        ka, kb = _revkey(ea), _revkey(eb)
        if ka < kb:
            return RefineOutcome.LESS
        if ka > kb:
            return RefineOutcome.GREATER
    if len(sa) < len(sb):
        return RefineOutcome.LESS
    if len(sa) > len(sb):
        return RefineOutcome.GREATER
    return RefineOutcome.EQUIVALENT


def degree_tuple_compare(p: Polynomial, q: Polynomial) -> RefineOutcome:
    """Lex comparison of degree tuples, highest variable most significant."""
    a = p.degree_tuple()[::-1]
    b = q.degree_tuple()[::-1]
    if a < b:
        return RefineOutcome.LESS
    if a > b:
        return RefineOutcome.GREATER
    return RefineOutcome.EQUIVALENT
