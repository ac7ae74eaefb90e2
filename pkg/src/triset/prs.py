"""Pseudo-division and polynomial remainder sequences.

The subresultant PRS follows Brown's scheme: each pseudo-remainder is divided
exactly by a predictable factor, which keeps coefficient growth polynomial
instead of exponential.  The sequence carries its divisor/auxiliary
bookkeeping so the exact-division invariants can be checked from outside.
A fraction-free Sylvester-determinant resultant is provided as an
independent oracle for the PRS-based resultant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import Polynomial, exact_divide, multivariate_gcd


@dataclass(frozen=True)
class PseudoDivisionResult:
    """prem/pquo pair with the multiplier exponent actually used.

    Satisfies ``lc(q, x)**power * p == quotient * q + remainder`` exactly,
    with ``deg(remainder, x) < deg(q, x)``.
    """

    remainder: Polynomial
    quotient: Polynomial
    power: int


def pseudo_divide(
    p: Polynomial, q: Polynomial, var: int, fixed_power: bool = False
) -> PseudoDivisionResult:
    """Pseudo-division of ``p`` by ``q`` with respect to ``x_var``.

    By default ``power`` is the number of elimination steps actually taken,
    the minimal exponent making the division identity hold.  With
    ``fixed_power`` the result is scaled up to the classical exponent
    ``deg(p) - deg(q) + 1``, the convention under which the subresultant
    divisor recurrences are exact.
    """
    if q.is_zero:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    p._check(q)
    d = q.degree_in(var)
    lc_q = q.coefficient_in(var, d)
    r = p
    quo = Polynomial.zero(p.order)
    s = 0
    n = len(p.order)
    while not r.is_zero and r.degree_in(var) >= d:
        dr = r.degree_in(var)
        shift = [0] * n
        shift[var] = dr - d
        t = r.coefficient_in(var, dr).times_monomial(tuple(shift))
        r = r * lc_q - q * t
        quo = quo * lc_q + t
        s += 1
    if fixed_power:
        target = max(p.degree_in(var) - d + 1, 0)
        if target > s:
            scale = lc_q ** (target - s)
            r = r * scale
            quo = quo * scale
            s = target
    return PseudoDivisionResult(r, quo, s)


def prem(p: Polynomial, q: Polynomial, var: int) -> Polynomial:
    return pseudo_divide(p, q, var).remainder


def prem_chain(f: Polynomial, chain: Sequence[Polynomial]) -> Polynomial:
    """Iterated pseudo-remainder of ``f`` by a triangular set, top down."""
    r = f
    for t in reversed(list(chain)):
        if r.is_zero:
            return r
        r = prem(r, t, t.leading_variable_index())
    return r


@dataclass(frozen=True)
class OneStepResult:
    """One-step pseudo-division: ``rest == f_mul*p - g_mul*q*x**shift``."""

    rest: Polynomial
    f_mul: Polynomial
    g_mul: Polynomial
    shift: int


def one_step_pseudo_divide(p: Polynomial, q: Polynomial) -> OneStepResult:
    """Clear the leading ``lv(q)``-term of ``p`` against ``q`` in one step.

    The multipliers are kept minimal via a gcd of the two leading
    coefficients.  Requires ``deg(p, lv(q)) >= ldeg(q)``.
    """
    p._check(q)
    if q.is_constant:
        raise ValueError("one-step pseudo-division needs a non-constant divisor")
    var = q.leading_variable_index()
    dq = q.leading_degree
    dp = p.degree_in(var)
    if dp < dq:
        raise ValueError("polynomial is already reduced w.r.t. the divisor")
    i = q.initial
    j = p.coefficient_in(var, dp)
    g = multivariate_gcd(i, j)
    f_mul = exact_divide(i, g)
    g_mul = exact_divide(j, g)
    shift = dp - dq
    exps = [0] * len(p.order)
    exps[var] = shift
    rest = p * f_mul - (q * g_mul).times_monomial(tuple(exps))
    return OneStepResult(rest, f_mul, g_mul, shift)


@dataclass(frozen=True)
class SubresultantSequence:
    """Subresultant PRS with its exact-division bookkeeping.

    ``divisors[i]`` is the factor dividing ``prem(elements[i], elements[i+1])``
    to produce ``elements[i+2]``; ``auxiliaries`` are the matching recurrence
    state values (one per divisor).
    """

    elements: Tuple[Polynomial, ...]
    degrees: Tuple[int, ...]
    divisors: Tuple[Polynomial, ...]
    auxiliaries: Tuple[Polynomial, ...]
    variable: int


def _inner_prs(
    p: Polynomial, q: Polynomial, var: int
) -> Tuple[List[Polynomial], List[int], List[Polynomial], List[Polynomial], Optional[Polynomial]]:
    """Shared engine for the PRS and the PRS-tail resultant.

    Returns (elements, degrees, divisors, auxiliaries, scalar) where scalar is
    the final scalar subresultant (the resultant when the last element is free
    of ``x_var``), or None when the sequence stops after two elements.
    """
    order = p.order
    elems = [p, q]
    degs = [p.degree_in(var), q.degree_in(var)]
    divisors: List[Polynomial] = []
    aux: List[Polynomial] = []

    r = pseudo_divide(p, q, var, fixed_power=True).remainder
    if r.is_zero:
        return elems, degs, divisors, aux, None

    one = Polynomial.one(order)
    q3 = one if (degs[0] - degs[1] + 1) % 2 == 0 else -one
    h = -one  # auxiliary for the first division
    divisors.append(q3)
    aux.append(h)
    nxt = exact_divide(r, q3)
    elems.append(nxt)
    degs.append(nxt.degree_in(var))

    while True:
        r = pseudo_divide(elems[-2], elems[-1], var, fixed_power=True).remainder
        # auxiliary update driven by the step before the previous one
        delta_prev = degs[-3] - degs[-2]
        neg_lc = -elems[-2].coefficient_in(var, degs[-2])
        if delta_prev == 0:
            h_new = h
        elif delta_prev == 1:
            h_new = neg_lc
        else:
            h_new = exact_divide(neg_lc ** delta_prev, h ** (delta_prev - 1))
        if r.is_zero:
            # extend the auxiliary once more to expose the final scalar
            delta_last = degs[-2] - degs[-1]
            neg_lc_last = -elems[-1].coefficient_in(var, degs[-1])
            if delta_last == 0:
                h_last = h_new
            elif delta_last == 1:
                h_last = neg_lc_last
            else:
                h_last = exact_divide(
                    neg_lc_last ** delta_last, h_new ** (delta_last - 1)
                )
            return elems, degs, divisors, aux, -h_last
        qdiv = neg_lc * (h_new ** (degs[-2] - degs[-1]))
        divisors.append(qdiv)
        aux.append(h_new)
        h = h_new
        nxt = exact_divide(r, qdiv)
        elems.append(nxt)
        degs.append(nxt.degree_in(var))


def subresultant_prs(p: Polynomial, q: Polynomial, var: int) -> SubresultantSequence:
    """Subresultant PRS of ``p`` and ``q`` w.r.t. ``x_var``.

    Requires both non-zero with ``deg(p, x_var) >= deg(q, x_var) >= 0`` and a
    positive degree for ``p``.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("subresultant PRS of a zero polynomial")
    if p.degree_in(var) < q.degree_in(var):
        raise ValueError("dividend must have degree at least that of the divisor")
    elems, degs, divisors, aux, _ = _inner_prs(p, q, var)
    return SubresultantSequence(
        tuple(elems), tuple(degs), tuple(divisors), tuple(aux), var
    )


def euclidean_prs(p: Polynomial, q: Polynomial, var: int) -> Tuple[Polynomial, ...]:
    """Plain pseudo-remainder sequence (no division of remainders)."""
    if p.is_zero or q.is_zero:
        raise ValueError("Euclidean PRS of a zero polynomial")
    seq = [p, q]
    while True:
        r = prem(seq[-2], seq[-1], var)
        if r.is_zero:
            return tuple(seq)
        seq.append(r)


def resultant(p: Polynomial, q: Polynomial, var: int) -> Polynomial:
    """Resultant of ``p`` and ``q`` w.r.t. ``x_var`` via the subresultant PRS."""
    p._check(q)
    order = p.order
    if p.is_zero or q.is_zero:
        return Polynomial.zero(order)
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if dp == 0 and dq == 0:
        raise ValueError("resultant needs positive degree in the chosen variable")
    if dq == 0:
        return q ** dp
    if dp == 0:
        return p ** dq
    if dp < dq:
        r = resultant(q, p, var)
        return -r if (dp * dq) % 2 else r
    elems, degs, _, _, scalar = _inner_prs(p, q, var)
    if scalar is None:
        # prem(p, q) vanished immediately: q divides a multiple of p
        return Polynomial.zero(order)
    if degs[-1] > 0:
        return Polynomial.zero(order)
    return scalar


def sylvester_matrix(p: Polynomial, q: Polynomial, var: int) -> List[List[Polynomial]]:
    """Sylvester matrix of ``p`` and ``q`` w.r.t. ``x_var``.

    Entries are polynomials in the remaining variables; the matrix has
    dimension ``deg(p) + deg(q)``.
    """
    p._check(q)
    m = p.degree_in(var)
    n = q.degree_in(var)
    if m < 0 or n < 0:
        raise ValueError("Sylvester matrix of a zero polynomial")
    zero = Polynomial.zero(p.order)
    pc = p.coefficients_in(var)
    qc = q.coefficients_in(var)
    size = m + n
    rows: List[List[Polynomial]] = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = pc.get(m - k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = qc.get(n - k, zero)
        rows.append(row)
    return rows


def _bareiss_determinant(matrix: List[List[Polynomial]], order) -> Polynomial:
    n = len(matrix)
    if n == 0:
        return Polynomial.one(order)
    a = [row[:] for row in matrix]
    sign = 1
    prev = Polynomial.one(order)
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(order)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = Polynomial.zero(order)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_resultant(p: Polynomial, q: Polynomial, var: int) -> Polynomial:
    """Resultant as the exact determinant of the Sylvester matrix."""
    p._check(q)
    order = p.order
    if p.is_zero or q.is_zero:
        return Polynomial.zero(order)
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if dp == 0 and dq == 0:
        raise ValueError("resultant needs positive degree in the chosen variable")
    if dq == 0:
        return q ** dp
    if dp == 0:
        return p ** dq
    return _bareiss_determinant(sylvester_matrix(p, q, var), order)
