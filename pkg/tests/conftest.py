"""Shared helpers: parsing shortcuts and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from triset import Polynomial, VariableOrder, parse_poly
from triset.reductions import is_reduced

ROOT = Path(__file__).resolve().parent.parent
SYSTEMS = ROOT / "systems"

XY = VariableOrder(["x", "y"])
XYZ = VariableOrder(["x", "y", "z"])
WXYZ = VariableOrder(["w", "x", "y", "z"])
ABCDEX = VariableOrder(["a", "b", "c", "d", "e", "x"])


def P(order: VariableOrder, text: str) -> Polynomial:
    return parse_poly(order, text)


def random_poly(
    rng: random.Random,
    order: VariableOrder,
    max_total_deg: int = 4,
    max_terms: int = 6,
    coeff_bound: int = 10,
) -> Polynomial:
    n = len(order)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        budget = rng.randint(0, max_total_deg)
        exps = [0] * n
        for i in rng.sample(range(n), n):
            e = rng.randint(0, budget)
            exps[i] = e
            budget -= e
        coeff = rng.randint(-coeff_bound, coeff_bound)
        key = tuple(exps)
        total = terms.get(key, 0) + coeff
        if total:
            terms[key] = total
        elif key in terms:
            del terms[key]
    return Polynomial(order, terms)


def random_nonzero(rng, order, **kw) -> Polynomial:
    while True:
        p = random_poly(rng, order, **kw)
        if not p.is_zero:
            return p


def random_nonconstant(rng, order, **kw) -> Polynomial:
    while True:
        p = random_poly(rng, order, **kw)
        if not p.is_constant:
            return p


def random_reducible_pair(rng, order, **kw):
    """A pair with ``deg(p, lv(q)) >= ldeg(q)``."""
    while True:
        q = random_nonconstant(rng, order, **kw)
        p = random_nonzero(rng, order, **kw)
        if p.is_constant or p == q:
            continue
        if not is_reduced(p, q):
            return p, q


def random_point(rng, n: int) -> tuple:
    return tuple(
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)
    )
