"""Triangularization of polynomial systems into characteristic sets.

The driver loop alternates two phases.  The inner phase repeatedly picks a
(reductend, reductor, reduction) triple and replaces the reductend by the
reduction rest, maintaining alongside a basis that generates the same ideal
as the input; it ends by extracting a rank-minimal ascending subset (a medial
set).  The outer phase pseudo-reduces the basis against the medial set and
feeds any non-zero remainders back in, until every basis element
pseudo-reduces to zero.  Setting the inner iteration budget to zero recovers
the classical Ritt-Wu flow driven by basic sets alone.

With certificate tracking enabled every polynomial the pipeline produces is
accompanied by an explicit rational combination of the original inputs, which
makes ideal membership of the output checkable by re-expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from math import gcd as _int_gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .order import degree_tuple_compare, refine_compare
from .poly import Polynomial, exact_divide
from .prs import prem_chain, pseudo_divide
from .reductions import (
    ReductionKind,
    ReductionRest,
    is_kind_reducible,
    is_reduced,
    rem_certified,
    rem_plus,
)


# ---------------------------------------------------------------------------
# rational combinations of the input polynomials (certificate mode)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalCofactor:
    """A polynomial scaled by a positive integer denominator."""

    num: Polynomial
    den: int

    def _reduced(self) -> "RationalCofactor":
        if self.num.is_zero:
            return RationalCofactor(self.num, 1)
        g = _int_gcd(self.num.content(), self.den)
        if g <= 1:
            return self
        return RationalCofactor(exact_divide(self.num, Polynomial.constant(self.num.order, g)), self.den // g)

    def plus(self, other: "RationalCofactor") -> "RationalCofactor":
        num = self.num * other.den + other.num * self.den
        return RationalCofactor(num, self.den * other.den)._reduced()

    def times(self, poly: Polynomial, num: int = 1, den: int = 1) -> "RationalCofactor":
        if den < 0:
            num, den = -num, -den
        return RationalCofactor(self.num * poly * num, self.den * den)._reduced()


class Combination:
    """An explicit rational combination of the original input polynomials."""

    __slots__ = ("cofactors",)

    def __init__(self, cofactors: Sequence[RationalCofactor]):
        self.cofactors = tuple(cofactors)

    @classmethod
    def unit(cls, order, size: int, index: int) -> "Combination":
        zero = Polynomial.zero(order)
        one = Polynomial.one(order)
        return cls(
            [
                RationalCofactor(one if i == index else zero, 1)
                for i in range(size)
            ]
        )

    @classmethod
    def zero(cls, order, size: int) -> "Combination":
        z = RationalCofactor(Polynomial.zero(order), 1)
        return cls([z] * size)

    def scaled(self, poly: Polynomial, num: int = 1, den: int = 1) -> "Combination":
        return Combination([c.times(poly, num, den) for c in self.cofactors])

    def plus(self, other: "Combination") -> "Combination":
        return Combination([a.plus(b) for a, b in zip(self.cofactors, other.cofactors)])

    def expands_to(self, inputs: Sequence[Polynomial], target: Polynomial) -> bool:
        """Exact check that ``sum(cofactor_i * input_i) == target``."""
        den = 1
        for c in self.cofactors:
            den = den * c.den // _int_gcd(den, c.den)
        order = target.order
        total = Polynomial.zero(order)
        for c, f in zip(self.cofactors, inputs):
            total = total + c.num * f * (den // c.den)
        return total == target * den


# ---------------------------------------------------------------------------
# ascending sets and options
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AscendingSet:
    """A triangular set that is at least initial-reduced, or a contradiction.

    ``flavor`` records the verified strength: ``"strong"`` when every element
    is fully reduced against its predecessors, ``"weak"`` when only the
    initials are.
    """

    elements: Tuple[Polynomial, ...]
    contradiction: Optional[Polynomial] = None
    flavor: str = "strong"

    @classmethod
    def contradictory(cls, constant: Polynomial) -> "AscendingSet":
        if constant.is_zero or not constant.is_constant:
            raise ValueError("contradiction witness must be a non-zero constant")
        return cls((), constant, "strong")

    @classmethod
    def from_elements(cls, elements: Sequence[Polynomial]) -> "AscendingSet":
        elems = tuple(elements)
        if not elems:
            raise ValueError("ascending set needs at least one polynomial")
        classes = [e.poly_class for e in elems]
        if any(c == 0 for c in classes):
            raise ValueError("ascending set elements must be non-constant")
        if any(a >= b for a, b in zip(classes, classes[1:])):
            raise ValueError("leading variables must strictly increase")
        strong = True
        for i, e in enumerate(elems):
            for t in elems[:i]:
                if not is_reduced(e.initial, t):
                    raise ValueError("initials must be reduced against predecessors")
                if not is_reduced(e, t):
                    strong = False
        return cls(elems, None, "strong" if strong else "weak")

    @property
    def is_contradictory(self) -> bool:
        return self.contradiction is not None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FindTriple:
    reductend: Polynomial
    reductor: Polynomial
    kind: ReductionKind


@dataclass(frozen=True)
class EliminationOptions:
    """Strategy knobs for the triangularization driver.

    ``inner_limit`` bounds the reduction loop per round (``None`` runs until
    no triple is found, ``0`` recovers the plain Ritt-Wu flow).  ``weak``
    switches the one-step pseudo-division predicate to test the reductend's
    initial.  ``sort`` picks the reductend ordering (``"refine"`` or
    ``"degtuple"``).  ``certificates`` tracks explicit input combinations and
    requires ``use_sc=False``.
    """

    inner_limit: Optional[int] = None
    weak: bool = False
    sort: str = "refine"
    certificates: bool = False
    use_sc: bool = True
    max_rounds: int = 64

    def __post_init__(self):
        if self.sort not in ("refine", "degtuple"):
            raise ValueError(f"unknown sort strategy {self.sort!r}")
        if self.certificates and self.use_sc:
            raise ValueError("certificate tracking requires disabling the PRS reduction")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be positive")


@dataclass
class ReductionStep:
    reductend: Polynomial
    reductor: Polynomial
    kind: ReductionKind
    rest: ReductionRest


@dataclass
class RoundRecord:
    """Trace of one inner phase: steps taken, basis after, medial set found."""

    steps: List[ReductionStep] = field(default_factory=list)
    basis: Tuple[Polynomial, ...] = ()
    medial: Optional[AscendingSet] = None
    remainders: Tuple[Polynomial, ...] = ()


@dataclass
class CharSetResult:
    gcs: AscendingSet
    basis: Tuple[Polynomial, ...]
    status: str  # "ok" | "contradictory" | "iteration-limit"
    rounds: List[RoundRecord]
    loops: int
    combinations: Optional[Dict[Polynomial, Combination]] = None

    @property
    def medials(self) -> List[AscendingSet]:
        return [r.medial for r in self.rounds if r.medial is not None]


@dataclass(frozen=True)
class DecompositionBranches:
    """Zero-set split induced by the initials of a characteristic set."""

    char_set: AscendingSet
    initials: Tuple[Polynomial, ...]
    side_systems: Tuple[Tuple[Polynomial, ...], ...]


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _dedupe(polys) -> Tuple[Polynomial, ...]:
    out: List[Polynomial] = []
    seen = set()
    for p in polys:
        if p.is_zero or p in seen:
            continue
        seen.add(p)
        out.append(p)
    return tuple(out)


def _refine_cmp(a: Polynomial, b: Polynomial) -> int:
    return refine_compare(a, b).value


def _degtuple_cmp(a: Polynomial, b: Polynomial) -> int:
    return degree_tuple_compare(a, b).value


def _select_min(candidates, keys, cmp=None):
    """Pick the minimum by successive keys, then an optional comparator,
    then earliest position."""
    pool = list(candidates)
    for key in keys:
        best = min(key(c) for c in pool)
        pool = [c for c in pool if key(c) == best]
        if len(pool) == 1:
            return pool[0]
    if cmp is not None and len(pool) > 1:
        # stable sort: earliest input position wins among equivalents
        pool.sort(key=cmp_to_key(cmp))
    return pool[0]


# ---------------------------------------------------------------------------
# basic set
# ---------------------------------------------------------------------------


def basic_set(polys: Sequence[Polynomial]) -> AscendingSet:
    """Rank-minimal ascending subset of ``polys``.

    Greedy: take the rank-minimal polynomial (ties by fewest terms, then
    refinement order, then input position), keep only candidates of strictly
    higher class whose initials are reduced against the chosen element, and
    repeat.  A non-zero constant in the input yields a contradiction.
    """
    items = _dedupe(polys)
    if not items:
        raise ValueError("basic set of an empty polynomial set")
    for p in items:
        if p.is_constant:
            return AscendingSet.contradictory(p)
    chosen: List[Polynomial] = []
    pool = list(items)
    while pool:
        best = _select_min(
            pool,
            keys=[lambda f: (f.poly_class, f.leading_degree), lambda f: f.term_count],
            cmp=_refine_cmp,
        )
        chosen.append(best)
        pool = [
            f
            for f in pool
            if f.poly_class > best.poly_class and is_reduced(f.initial, best)
        ]
    return AscendingSet.from_elements(chosen)


# ---------------------------------------------------------------------------
# triple selection
# ---------------------------------------------------------------------------


def _sp_reducible(p: Polynomial, q: Polynomial, weak: bool) -> bool:
    if weak:
        ini = p.initial
        if ini.is_constant or is_reduced(ini, q):
            return False
        # the applied step is the ordinary one on (p, q); it must descend
        return is_kind_reducible(p, q, ReductionKind.SP)
    return is_kind_reducible(p, q, ReductionKind.SP)


def find_reduction(
    polys: Sequence[Polynomial], opts: EliminationOptions = EliminationOptions()
) -> Optional[FindTriple]:
    """Choose the next (reductend, reductor, reduction) triple, or None.

    Univariate gcd pairs win outright; otherwise reductends are scanned from
    the top of the sorted input, trying one-step division, then the
    subresultant reduction, then one-step pseudo-division, each with the
    reductor of fewest terms and minimal leading degree.
    """
    items = [p for p in _dedupe(polys) if not p.is_constant]
    if len(items) < 2:
        return None
    n = len(items[0].order)

    # univariate pairs, scanned from the highest variable down
    group: List[Polynomial] = []
    for var in range(n - 1, -1, -1):
        group = [p for p in items if p.is_univariate_in(var)]
        if len(group) >= 2:
            break
    if len(group) >= 2:
        indexed = list(enumerate(group))
        best_i, reductend = max(indexed, key=lambda t: (t[1].leading_degree, t[0]))
        rest = [p for i, p in indexed if i != best_i]
        reductor = _select_min(
            rest,
            keys=[lambda f: f.term_count, lambda f: f.leading_degree],
            cmp=_refine_cmp,
        )
        return FindTriple(reductend, reductor, ReductionKind.UG)

    comparator = _refine_cmp if opts.sort == "refine" else _degtuple_cmp
    ordered = sorted(items, key=cmp_to_key(comparator))

    kinds: List[ReductionKind] = [ReductionKind.SD]
    if opts.use_sc:
        kinds.append(ReductionKind.SC)
    kinds.append(ReductionKind.SP)

    for kind in kinds:
        for i in range(len(ordered) - 1, 0, -1):
            p = ordered[i]
            if kind is ReductionKind.SD:
                cands = [q for q in items if q is not p and is_kind_reducible(p, q, kind)]
            elif kind is ReductionKind.SC:
                cands = [
                    q
                    for q in items
                    if q is not p
                    and q.leading_variable_index() == p.leading_variable_index()
                ]
            else:
                cands = [q for q in items if q is not p and _sp_reducible(p, q, opts.weak)]
            if not cands:
                continue
            q = _select_min(
                cands,
                keys=[lambda f: f.term_count, lambda f: f.leading_degree],
                cmp=_refine_cmp,
            )
            if kind is ReductionKind.SC and p.leading_degree < q.leading_degree:
                return FindTriple(q, p, kind)
            return FindTriple(p, q, kind)
    return None


# ---------------------------------------------------------------------------
# inner phase
# ---------------------------------------------------------------------------


def _record_combination(
    combos: Dict[Polynomial, Combination],
    rest: ReductionRest,
    p: Polynomial,
    q: Polynomial,
) -> None:
    cert = rest.certificate
    if cert is None:
        raise ValueError("certificate tracking requires certified reductions")
    cp, cq = combos[p], combos[q]
    for r, (ap, aq, den) in (
        (rest.r1, (cert.r1_p, cert.r1_q, cert.r1_den)),
        (rest.r2, (cert.r2_p, cert.r2_q, cert.r2_den)),
    ):
        if r.is_zero or r in combos:
            continue
        combos[r] = cp.scaled(ap, 1, den).plus(cq.scaled(aq, 1, den))


def auto_reduce(
    polys: Sequence[Polynomial],
    opts: EliminationOptions = EliminationOptions(),
    combos: Optional[Dict[Polynomial, Combination]] = None,
) -> Tuple[AscendingSet, Tuple[Polynomial, ...], RoundRecord]:
    """One inner phase: reduce until no triple is found (or the budget ends).

    Returns the medial set, a basis generating the same ideal as the input,
    and the step trace.  A non-zero constant rest collapses both to ``{1}``.
    """
    items = _dedupe(polys)
    if not items:
        raise ValueError("empty polynomial set")
    record = RoundRecord()
    working: List[Polynomial] = list(items)
    basis: List[Polynomial] = list(items)
    one = Polynomial.one(items[0].order)
    steps = 0
    while opts.inner_limit is None or steps < opts.inner_limit:
        triple = find_reduction(working, opts)
        if triple is None:
            break
        p, q, kind = triple.reductend, triple.reductor, triple.kind
        if opts.certificates:
            rest = rem_certified(p, q, kind)
        else:
            rest = rem_plus(p, q, kind)
        steps += 1
        if combos is not None:
            _record_combination(combos, rest, p, q)
        record.steps.append(ReductionStep(p, q, kind, rest))
        if rest.contains_nonzero_constant():
            working = [one]
            basis = [one]
            if combos is not None and one not in combos:
                witness = rest.r1 if rest.r1.is_constant and not rest.r1.is_zero else rest.r2
                combos[one] = combos[witness].scaled(
                    Polynomial.one(one.order), 1, witness.constant_value()
                )
            break
        working = list(
            _dedupe([f for f in working if f != p and f != q] + [rest.r1, rest.r2])
        )
        if p in basis and q in basis and rest.b_flag:
            basis = list(
                _dedupe([f for f in basis if f != p and f != q] + [rest.r1, rest.r2])
            )
    medial = basic_set(tuple(working) + items)
    record.basis = tuple(basis)
    record.medial = medial
    return medial, tuple(basis), record


# ---------------------------------------------------------------------------
# outer driver
# ---------------------------------------------------------------------------


def _prem_chain_tracked(
    f: Polynomial,
    chain: Sequence[Polynomial],
    combos: Optional[Dict[Polynomial, Combination]],
) -> Polynomial:
    r = f
    combo = combos[f] if combos is not None else None
    for t in reversed(list(chain)):
        if r.is_zero:
            break
        var = t.leading_variable_index()
        res = pseudo_divide(r, t, var)
        if combo is not None:
            mult = t.initial ** res.power
            combo = combo.scaled(mult).plus(combos[t].scaled(-res.quotient))
        r = res.remainder
    if combos is not None and not r.is_zero:
        sign, content = r.normalization_factors()
        normalized = r.normalized()
        if normalized not in combos:
            combos[normalized] = combo.scaled(
                Polynomial.one(f.order), sign, content
            )
    return r


def characteristic_set(
    polys: Sequence[Polynomial], opts: EliminationOptions = EliminationOptions()
) -> CharSetResult:
    """Triangularize ``polys`` into a (generalized) characteristic set.

    On success every element of the returned basis pseudo-reduces to zero
    against the output, and the basis generates the same ideal as the input.
    """
    items = _dedupe(polys)
    if not items:
        raise ValueError("empty polynomial set")
    order = items[0].order
    combos: Optional[Dict[Polynomial, Combination]] = None
    if opts.certificates:
        combos = {
            f: Combination.unit(order, len(items), i) for i, f in enumerate(items)
        }

    working = items
    rounds: List[RoundRecord] = []
    loops = 0
    asc: Optional[AscendingSet] = None
    basis: Tuple[Polynomial, ...] = items
    status = "iteration-limit"
    for _ in range(opts.max_rounds):
        asc, basis, record = auto_reduce(working, opts, combos)
        rounds.append(record)
        loops += len(record.steps)
        if asc.is_contradictory:
            status = "contradictory"
            break
        remainders: List[Polynomial] = []
        for b in basis:
            if b in asc.elements:
                continue
            raw = _prem_chain_tracked(b, asc.elements, combos)
            if not raw.is_zero:
                remainders.append(raw.normalized())
        remainders = list(_dedupe(remainders))
        record.remainders = tuple(remainders)
        if not remainders:
            status = "ok"
            break
        working = _dedupe(tuple(working) + tuple(asc.elements) + tuple(remainders))

    final_basis = basis if asc.is_contradictory else _dedupe(tuple(basis) + tuple(asc.elements))
    return CharSetResult(asc, final_basis, status, rounds, loops, combos)


def check_characteristic(
    asc: AscendingSet, witnesses: Sequence[Polynomial]
) -> bool:
    """True when every witness pseudo-reduces to zero against ``asc``."""
    if asc.is_contradictory:
        raise ValueError("cannot check a contradictory ascending set")
    return all(prem_chain(w, asc.elements).is_zero for w in witnesses)


def decomposition_branches(
    result: CharSetResult, inputs: Sequence[Polynomial]
) -> DecompositionBranches:
    """Emit the zero-set branches induced by the output initials.

    The main branch carries the characteristic set with its initials; each
    side system adjoins one initial to the original inputs.  No recursion is
    performed.
    """
    asc = result.gcs
    if asc.is_contradictory:
        raise ValueError("no decomposition for a contradictory system")
    initials = tuple(c.initial for c in asc.elements)
    side = tuple(_dedupe(tuple(inputs) + (ini,)) for ini in initials)
    return DecompositionBranches(asc, initials, side)
