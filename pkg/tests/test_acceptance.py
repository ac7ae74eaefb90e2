"""Acceptance suite: one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  All value checks are exact; the two timed suites assert their stated
wall-clock budgets.
"""

import random
import time
from fractions import Fraction

from conftest import (
    P,
    SYSTEMS,
    WXYZ,
    XY,
    XYZ,
    random_nonconstant,
    random_nonzero,
    random_poly,
    random_reducible_pair,
)
from triset import (
    EliminationOptions,
    Polynomial,
    RankOutcome,
    ReductionKind,
    VariableOrder,
    characteristic_set,
    euclidean_prs,
    index_tuple,
    one_step_pseudo_divide,
    parse_system,
    prem_chain,
    pseudo_divide,
    rank_compare_sets,
    rem,
    resultant,
    subresultant_prs,
    sylvester_resultant,
)
from triset.charset import basic_set
from triset.reductions import is_reduced

A14 = [
    "x^2 + y^2 + z^2 - w^2",
    "x*y + z^2 - 1",
    "x*y*z - x^2 - y^2 - z + 1",
]


def _ok(n, text):
    print(f"ACCEPTANCE {n}: {text}: PASS")


def corpus():
    out = []
    for path in sorted(SYSTEMS.glob("*.sys")):
        order, polys = parse_system(path.read_text())
        out.append((path.stem, order, polys))
    return out


def test_criterion_01_quadrics_end_to_end():
    system = [P(WXYZ, s) for s in A14]
    start = time.perf_counter()
    result = characteristic_set(system)
    elapsed = time.perf_counter() - start
    assert result.status == "ok"
    rows = [
        (r["degrees"], r["nops"], r["lm"], r["maxDigits"])
        for r in (index_tuple(t) for t in result.gcs.elements)
    ]
    assert rows == [
        ([8, 12, 0, 0], 23, "x^12", 2),
        ([4, 6, 1, 0], 12, "w^2x^3y", 1),
        ([4, 6, 0, 1], 17, "x^6z", 1),
    ]
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    _ok(1, "end-to-end index tuples, exact, under one second")


def test_criterion_02_intermediate_basis():
    system = [P(WXYZ, s) for s in A14]
    result = characteristic_set(system)
    expected = {
        P(WXYZ, "y^2 - x*y + x^2 - w^2 + 1"),
        P(WXYZ, "x*y*z - z - x*y - w^2 + 2"),
        P(WXYZ, "z^2 + x*y - 1"),
    }
    assert set(result.rounds[-1].basis) == expected
    _ok(2, "stabilized inner basis matches the expected three polynomials")


def test_criterion_03_quadratic_linear_prs():
    order = VariableOrder(["a", "b", "c", "d", "e", "x"])
    p = P(order, "a*x^2 + b*x + c")
    q = P(order, "d*x + e")
    k = P(order, "d^2*c - e*d*b + a*e^2")
    seq = subresultant_prs(p, q, 5)
    assert list(seq.elements) == [p, q, k]
    rest = rem(p, q, ReductionKind.SC)
    assert rest.r1 == k and rest.r2 == q
    _ok(3, "quadratic/linear PRS and its reduction rest, exact")


def test_criterion_04_pseudo_division_identity_suite():
    rng = random.Random(1004)
    start = time.perf_counter()
    for _ in range(500):
        p = random_nonzero(rng, XYZ)
        q = random_nonconstant(rng, XYZ)
        var = q.leading_variable_index()
        res = pseudo_divide(p, q, var)
        assert q.initial ** res.power * p == res.quotient * q + res.remainder
        assert res.remainder.is_zero or res.remainder.degree_in(var) < q.leading_degree
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.3f}s"
    _ok(4, "500 pseudo-division identities, exact, under five seconds")


def test_criterion_05_one_step_identity_suite():
    rng = random.Random(1005)
    for _ in range(300):
        p, q = random_reducible_pair(rng, XYZ)
        res = one_step_pseudo_divide(p, q)
        var = q.leading_variable_index()
        shift = [0] * len(XYZ)
        shift[var] = res.shift
        assert res.rest == res.f_mul * p - (res.g_mul * q).times_monomial(tuple(shift))
        for i in range(var + 1, len(XYZ)):
            assert res.rest.degree_in(i) <= p.degree_in(i)
    _ok(5, "300 one-step pseudo-division identities with degree bounds, exact")


def test_criterion_06_prs_oracles():
    rng = random.Random(1006)
    checked = 0
    while checked < 100:
        p = random_nonzero(rng, XY, max_total_deg=4, max_terms=4, coeff_bound=8)
        q = random_nonzero(rng, XY, max_total_deg=4, max_terms=4, coeff_bound=8)
        dp, dq = p.degree_in(1), q.degree_in(1)
        if dp < 1 or dq < 1 or dp + dq > 8:
            continue
        assert resultant(p, q, 1) == sylvester_resultant(p, q, 1)
        checked += 1

    checked = 0
    while checked < 200:
        q = random_nonconstant(rng, XY, max_total_deg=3, max_terms=4, coeff_bound=6)
        p = random_nonzero(rng, XY, max_total_deg=4, max_terms=5, coeff_bound=6)
        var = q.leading_variable_index()
        if p.degree_in(var) < q.degree_in(var) or q.degree_in(var) < 1:
            continue
        sub = subresultant_prs(p, q, var).elements
        euc = euclidean_prs(p, q, var)
        assert len(sub) == len(euc)
        for s, e in zip(sub, euc):
            d = s.degree_in(var)
            assert d == e.degree_in(var)
            assert s * e.coefficient_in(var, d) == e * s.coefficient_in(var, d)
        checked += 1
    _ok(6, "resultant equals the Sylvester determinant; PRS similar to Euclid")


def test_criterion_07_basic_set_minimality():
    rng = random.Random(1007)
    for _ in range(200):
        polys = []
        seen = set()
        for _ in range(rng.randint(1, 6)):
            f = random_nonconstant(rng, XYZ, max_total_deg=3, max_terms=3, coeff_bound=5)
            if f not in seen:
                seen.add(f)
                polys.append(f)
        out = basic_set(polys)
        assert not out.is_contradictory
        n = len(polys)
        for mask in range(1, 1 << n):
            subset = [polys[i] for i in range(n) if mask >> i & 1]
            classes = [f.poly_class for f in subset]
            if len(set(classes)) != len(classes):
                continue
            subset.sort(key=lambda f: f.poly_class)
            valid = all(
                is_reduced(e.initial, t)
                for i, e in enumerate(subset)
                for t in subset[:i]
            )
            if valid:
                assert rank_compare_sets(subset, out.elements) is not RankOutcome.LOWER
    _ok(7, "200 exhaustive minimality checks for basic sets, exact")


def test_criterion_08_driver_postconditions_on_corpus():
    systems = corpus()
    assert len(systems) >= 10
    successful = 0
    for name, order, polys in systems:
        result = characteristic_set(polys, EliminationOptions(max_rounds=64))
        assert result.status in ("ok", "contradictory"), name
        if result.status != "ok":
            continue
        successful += 1
        assert all(prem_chain(b, result.gcs.elements).is_zero for b in result.basis), name
        medials = [m for m in result.medials if not m.is_contradictory]
        for later, earlier in zip(medials[1:], medials):
            assert (
                rank_compare_sets(later.elements, earlier.elements)
                is RankOutcome.LOWER
            ), name
    assert successful >= 10
    _ok(8, f"{successful} successful corpus runs: basis reduces to zero, medials descend")


def test_criterion_09_certificate_soundness():
    rng = random.Random(1009)
    opts = EliminationOptions(certificates=True, use_sc=False)
    for _ in range(100):
        n_vars = rng.choice([2, 3])
        order = VariableOrder(["x", "y", "z"][:n_vars])
        nums = [rng.randint(-6, 6) for _ in range(n_vars)]
        dens = [rng.randint(1, 5) for _ in range(n_vars)]
        point = [Fraction(a, b) for a, b in zip(nums, dens)]
        # generators vanish at the point by construction
        vanishing = [
            Polynomial.variable(order, i) * dens[i] - Polynomial.constant(order, nums[i])
            for i in range(n_vars)
        ]
        system = []
        while len(system) < 2:
            f = Polynomial.zero(order)
            for g in vanishing:
                f = f + g * random_poly(rng, order, max_total_deg=1, max_terms=2, coeff_bound=3)
            if not f.is_zero and not f.is_constant:
                system.append(f)
        result = characteristic_set(system, opts)
        assert result.status == "ok"
        for t in result.gcs.elements:
            assert result.combinations[t].expands_to(system, t)
            assert t.evaluate(point) == 0
    _ok(9, "100 certified runs: outputs re-expand exactly and vanish with the inputs")


def test_criterion_10_weak_variant_structure():
    for name, order, polys in corpus():
        result = characteristic_set(polys, EliminationOptions(weak=True))
        assert result.status in ("ok", "contradictory"), name
        if result.status != "ok":
            continue
        elems = result.gcs.elements
        classes = [t.poly_class for t in elems]
        assert all(a < b for a, b in zip(classes, classes[1:])), name
        for i, t in enumerate(elems):
            for pred in elems[:i]:
                assert is_reduced(t.initial, pred), name
    _ok(10, "weak-variant outputs are initial-reduced ascending sets on the corpus")
