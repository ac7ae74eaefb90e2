"""Pairwise admissible reductions on polynomials.

Each reduction maps a (reductend, reductor) pair to a rest pair that stays in
the ideal generated by the inputs and strictly lowers the reductend under the
refinement order whenever the matching reducibility predicate holds.
Non-reducible inputs are echoed unchanged, which keeps the operations total.

Rest pairs are content/sign normalized.  The optional certificate expresses
both rest entries as explicit integer combinations of the inputs scaled by a
positive integer denominator, i.e. ``r1*r1_den == r1_p*p + r1_q*q`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd as _int_gcd
from typing import Dict, List, Optional, Tuple

from .order import RefineOutcome, refine_compare
from .poly import (
    Polynomial,
    exact_divide,
    monomial_div,
    monomial_divides,
    multivariate_gcd,
    _revkey,
)
from .prs import (
    one_step_pseudo_divide,
    prem,
    pseudo_divide,
    subresultant_prs,
)


class ReductionKind(Enum):
    UG = "UG"  # univariate gcd
    P = "P"    # full pseudo-division
    SP = "SP"  # one-step pseudo-division
    SD = "SD"  # one-step division
    D = "D"    # division (iterated SD)
    SC = "SC"  # subresultant PRS


#: Preference order used by the triple-selection strategy.
FIND_ORDER: Tuple[ReductionKind, ...] = (
    ReductionKind.UG,
    ReductionKind.SD,
    ReductionKind.SC,
    ReductionKind.SP,
)


class UnsupportedCertificateError(ValueError):
    """Raised when a certificate is requested for a reduction without one."""


@dataclass(frozen=True)
class Certificate:
    """Cofactor witness for both rest entries.

    ``r1 * r1_den == r1_p * p + r1_q * q`` and likewise for ``r2``; the
    denominators are positive, so membership in the ideal over the rationals
    follows directly.
    """

    r1_p: Polynomial
    r1_q: Polynomial
    r1_den: int
    r2_p: Polynomial
    r2_q: Polynomial
    r2_den: int

    def verify(self, p: Polynomial, q: Polynomial, r1: Polynomial, r2: Polynomial) -> bool:
        lhs1 = r1 * self.r1_den
        lhs2 = r2 * self.r2_den
        return (
            lhs1 == self.r1_p * p + self.r1_q * q
            and lhs2 == self.r2_p * p + self.r2_q * q
        )


@dataclass(frozen=True)
class ReductionRest:
    r1: Polynomial
    r2: Polynomial
    b_flag: Optional[bool] = None
    certificate: Optional[Certificate] = None

    def contains_nonzero_constant(self) -> bool:
        return (self.r1.is_constant and not self.r1.is_zero) or (
            self.r2.is_constant and not self.r2.is_zero
        )


def is_reduced(p: Polynomial, q: Polynomial) -> bool:
    """True when ``deg(p, lv(q)) < ldeg(q)``."""
    if q.is_constant:
        raise ValueError("reducedness is undefined against a constant")
    return p.degree_in(q.leading_variable_index()) < q.leading_degree


def is_reduced_wrt_chain(p: Polynomial, chain) -> bool:
    return all(is_reduced(p, t) for t in chain)


def _divisible_monomials(p: Polynomial, q: Polynomial):
    lt_q = q.head_exponents()
    return [e for e in p.terms if monomial_divides(lt_q, e)]


def descent_guaranteed(p: Polynomial, q: Polynomial, kind: ReductionKind) -> bool:
    """True when a (one-step) pseudo-division rest must shrink the reductend.

    With equal leading variables the whole top block of the reductend
    cancels.  Otherwise the rest only descends under the refinement order
    when the multiplier applied to the reductend is constant; a non-constant
    multiplier can push the head term up in the lower variables.
    """
    if p.leading_variable_index() == q.leading_variable_index():
        return True
    if kind is ReductionKind.P:
        return q.initial.is_constant
    var = q.leading_variable_index()
    i = q.initial
    if i.is_constant:
        return True
    j = p.coefficient_in(var, p.degree_in(var))
    return exact_divide(i, multivariate_gcd(i, j)).is_constant


def _pseudo_rest_descends(p: Polynomial, q: Polynomial, kind: ReductionKind) -> bool:
    """Semantic reducibility for the pseudo-division kinds.

    Reducibility requires the rest to strictly shrink the reductend under
    the refinement order; a degree drop in ``lv(q)`` alone does not imply
    that when ``lv(p)`` is higher and the multiplier is non-constant.  The
    guaranteed region is decided structurally; elsewhere the rest itself is
    inspected.
    """
    if is_reduced(p, q):
        return False
    if descent_guaranteed(p, q, kind):
        return True
    if kind is ReductionKind.SP:
        rest = one_step_pseudo_divide(p, q).rest
    else:
        rest = pseudo_divide(p, q, q.leading_variable_index()).remainder
    return refine_compare(rest, p) is RefineOutcome.LESS


def is_kind_reducible(p: Polynomial, q: Polynomial, kind: ReductionKind) -> bool:
    """Reducibility predicate of the given reduction kind."""
    if p.is_constant or q.is_constant:
        raise ValueError("reducibility needs non-constant polynomials")
    if kind is ReductionKind.UG:
        i = q.leading_variable_index()
        return p.is_univariate_in(i) and q.is_univariate_in(i)
    if kind in (ReductionKind.P, ReductionKind.SP):
        return _pseudo_rest_descends(p, q, kind)
    if kind in (ReductionKind.SD, ReductionKind.D):
        return bool(_divisible_monomials(p, q))
    if kind is ReductionKind.SC:
        return (
            p.leading_variable_index() == q.leading_variable_index()
            and p.leading_degree >= q.leading_degree
        )
    raise ValueError(f"unknown reduction kind {kind}")


def _normalize_with_factors(p: Polynomial) -> Tuple[Polynomial, int, int]:
    sign, content = p.normalization_factors()
    return p.normalized(), sign, content


def _univariate_gcd_certificate(p: Polynomial, q: Polynomial, var: int):
    """Extended Euclid on a univariate pair; returns (gcd_raw, cof_p, cof_q)."""
    zero = Polynomial.zero(p.order)
    one = Polynomial.one(p.order)
    r_prev, r_cur = p, q
    cof_prev: Tuple[Polynomial, Polynomial] = (one, zero)
    cof_cur: Tuple[Polynomial, Polynomial] = (zero, one)
    if r_prev.degree_in(var) < r_cur.degree_in(var):
        r_prev, r_cur = r_cur, r_prev
        cof_prev, cof_cur = cof_cur, cof_prev
    while not r_cur.is_zero:
        res = pseudo_divide(r_prev, r_cur, var)
        lc = r_cur.coefficient_in(var, r_cur.degree_in(var))
        mult = lc ** res.power
        nxt = (
            cof_prev[0] * mult - cof_cur[0] * res.quotient,
            cof_prev[1] * mult - cof_cur[1] * res.quotient,
        )
        r_prev, r_cur = r_cur, res.remainder
        cof_prev, cof_cur = cof_cur, nxt
    return r_prev, cof_prev[0], cof_prev[1]


def _apply(
    p: Polynomial, q: Polynomial, kind: ReductionKind, certify: bool
) -> ReductionRest:
    order = p.order
    zero = Polynomial.zero(order)
    one = Polynomial.one(order)

    def echo() -> ReductionRest:
        cert = Certificate(one, zero, 1, zero, one, 1) if certify else None
        return ReductionRest(p, q, False, cert)

    def q_side() -> Tuple[Polynomial, Polynomial, int]:
        return zero, one, 1

    if kind is ReductionKind.UG:
        i = q.leading_variable_index()
        if not (p.is_univariate_in(i) and q.is_univariate_in(i)):
            return echo()
        if certify:
            g_raw, cp, cq = _univariate_gcd_certificate(p, q, i)
            if g_raw.is_constant:
                g = one
                den = abs(g_raw.constant_value())
                if g_raw.constant_value() < 0:
                    cp, cq = -cp, -cq
            else:
                g, sign, content = _normalize_with_factors(g_raw)
                den = content
                if sign < 0:
                    cp, cq = -cp, -cq
            cert = Certificate(zero, zero, 1, cp, cq, den)
        else:
            g = multivariate_gcd(p, q)
            cert = None
        return ReductionRest(zero, g, True, cert)

    if kind is ReductionKind.P:
        var = q.leading_variable_index()
        res = pseudo_divide(p, q, var)
        r1, sign, content = _normalize_with_factors(res.remainder)
        b = q.initial.is_constant or res.power == 0
        cert = None
        if certify:
            mult = q.initial ** res.power
            cert = Certificate(
                mult * sign, res.quotient * (-sign), content, *q_side()
            )
        return ReductionRest(r1, q, b, cert)

    if kind is ReductionKind.SP:
        if not is_kind_reducible(p, q, ReductionKind.SP):
            return echo()
        res = one_step_pseudo_divide(p, q)
        r1, sign, content = _normalize_with_factors(res.rest)
        b = res.f_mul.is_constant
        cert = None
        if certify:
            var = q.leading_variable_index()
            exps = [0] * len(order)
            exps[var] = res.shift
            g_shift = res.g_mul.times_monomial(tuple(exps))
            cert = Certificate(res.f_mul * sign, g_shift * (-sign), content, *q_side())
        return ReductionRest(r1, q, b, cert)

    if kind is ReductionKind.SD:
        hits = _divisible_monomials(p, q)
        if not hits:
            return echo()
        m = max(hits, key=_revkey)
        c_m = p.terms[m]
        lt_q = q.head_exponents()
        lc_q = q.head_coefficient()
        g = _int_gcd(c_m, lc_q)
        factor_p = lc_q // g
        factor_q = c_m // g
        m_hat = monomial_div(m, lt_q)
        raw = p * factor_p - q.times_monomial(m_hat, factor_q)
        r1, sign, content = _normalize_with_factors(raw)
        cert = None
        if certify:
            cert = Certificate(
                Polynomial.constant(order, factor_p * sign),
                Polynomial.monomial(order, m_hat, -factor_q * sign),
                content,
                *q_side(),
            )
        return ReductionRest(r1, q, True, cert)

    if kind is ReductionKind.D:
        hits = _divisible_monomials(p, q)
        if not hits:
            return echo()
        lt_q = q.head_exponents()
        lc_q = q.head_coefficient()
        r = p
        alpha = 1
        beta = zero
        while True:
            hits = _divisible_monomials(r, q)
            if not hits:
                break
            m = max(hits, key=_revkey)
            c_m = r.terms[m]
            g = _int_gcd(c_m, lc_q)
            factor_p = lc_q // g
            factor_q = c_m // g
            m_hat = monomial_div(m, lt_q)
            r = r * factor_p - q.times_monomial(m_hat, factor_q)
            alpha *= factor_p
            beta = beta * factor_p + Polynomial.monomial(order, m_hat, factor_q)
        r1, sign, content = _normalize_with_factors(r)
        cert = None
        if certify:
            cert = Certificate(
                Polynomial.constant(order, alpha * sign),
                beta * (-sign),
                content,
                *q_side(),
            )
        return ReductionRest(r1, q, True, cert)

    if kind is ReductionKind.SC:
        if certify:
            raise UnsupportedCertificateError(
                "subresultant reduction carries no cofactor certificate"
            )
        if not is_kind_reducible(p, q, ReductionKind.SC):
            return ReductionRest(p, q, False, None)
        var = q.leading_variable_index()
        seq = subresultant_prs(p, q, var)
        last = seq.elements[-1]
        if last.degree_in(var) > 0:
            # vanishing resultant: the tail is a gcd candidate
            return ReductionRest(zero, last.normalized(), False, None)
        return ReductionRest(
            last.normalized(), seq.elements[-2].normalized(), False, None
        )

    raise ValueError(f"unknown reduction kind {kind}")


def _validate_pair(p: Polynomial, q: Polynomial) -> None:
    if p.is_constant or q.is_constant:
        raise ValueError("reductions require non-constant polynomials")
    p._check(q)


def rem(p: Polynomial, q: Polynomial, kind: ReductionKind) -> ReductionRest:
    """Reduction rest of ``p`` by ``q``; echoes ``[p, q]`` when not reducible."""
    _validate_pair(p, q)
    out = _apply(p, q, kind, certify=False)
    return ReductionRest(out.r1, out.r2, None, None)


def rem_plus(p: Polynomial, q: Polynomial, kind: ReductionKind) -> ReductionRest:
    """Like :func:`rem` but with the basis-replacement flag populated.

    A true flag certifies that the inputs lie in the ideal of the rests, which
    allows in-place replacement in a generating set.
    """
    _validate_pair(p, q)
    return _apply(p, q, kind, certify=False)


def rem_certified(p: Polynomial, q: Polynomial, kind: ReductionKind) -> ReductionRest:
    """Reduction rest with an explicit cofactor certificate (not for SC)."""
    _validate_pair(p, q)
    return _apply(p, q, kind, certify=True)
