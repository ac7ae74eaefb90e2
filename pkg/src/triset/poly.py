"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is stored as a mapping from exponent tuples to non-zero
arbitrary-precision integer coefficients.  The exponent tuple has one entry
per variable of the ambient :class:`VariableOrder`, whose position ``i``
holds the exponent of the ``i``-th variable.  Variables are ordered
ascending, ``x1 < ... < xn``, and the induced lexicographic term order makes
the *highest* variable most significant.

Every polynomial over the rationals is represented by an integer multiple of
itself; the canonical representative (unit content, positive leading
coefficient) is produced by :meth:`Polynomial.normalized`.  Arithmetic
operators are exact and perform no normalization, so identities such as
``c*p - c*p == 0`` hold on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Exponents = Tuple[int, ...]


class ExactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


def _revkey(exponents: Exponents) -> Exponents:
    # Lex comparison key: highest variable first.
    return exponents[::-1]


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    """True when the power product ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    """Quotient power product ``a / b``; requires ``b | a``."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ExactDivisionError(f"monomial {b} does not divide {a}")
    return out


@dataclass(frozen=True)
class VariableOrder:
    """A fixed ascending sequence of distinct variable names."""

    names: Tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("variable order must name at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def position(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None


@dataclass(frozen=True)
class Measure:
    """Structural summary of a polynomial.

    ``poly_class`` is the 1-based index of the leading variable (0 for
    constants), ``initial`` the leading coefficient with respect to that
    variable, ``head`` the lexicographically largest term as an
    ``(exponents, coefficient)`` pair, and ``max_digits`` the maximal decimal
    digit count over the integer coefficients.
    """

    poly_class: int
    lead_var: Optional[str]
    lead_degree: int
    initial: Optional["Polynomial"]
    degree_tuple: Tuple[int, ...]
    term_count: int
    head: Optional[Tuple[Exponents, int]]
    max_digits: int
    is_zero: bool = False


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("order", "_d", "_hash", "_degrees", "_sorted")

    def __init__(self, order: VariableOrder, terms: Mapping[Exponents, int]):
        n = len(order)
        d: Dict[Exponents, int] = {}
        for exps, coeff in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent tuple {exps} does not match {n} variables")
            if coeff:
                d[tuple(exps)] = coeff
        self.order = order
        self._d = d
        self._hash = None
        self._degrees = None
        self._sorted = None

    @classmethod
    def _raw(cls, order: VariableOrder, d: Dict[Exponents, int]) -> "Polynomial":
        # Internal fast path: d is fresh, zero-free is the caller's duty.
        self = object.__new__(cls)
        self.order = order
        self._d = d
        self._hash = None
        self._degrees = None
        self._sorted = None
        return self

    @classmethod
    def zero(cls, order: VariableOrder) -> "Polynomial":
        return cls._raw(order, {})

    @classmethod
    def constant(cls, order: VariableOrder, value: int) -> "Polynomial":
        if value == 0:
            return cls.zero(order)
        return cls._raw(order, {(0,) * len(order): value})

    @classmethod
    def one(cls, order: VariableOrder) -> "Polynomial":
        return cls.constant(order, 1)

    @classmethod
    def variable(cls, order: VariableOrder, name_or_index) -> "Polynomial":
        idx = name_or_index if isinstance(name_or_index, int) else order.position(name_or_index)
        exps = [0] * len(order)
        exps[idx] = 1
        return cls._raw(order, {tuple(exps): 1})

    @classmethod
    def monomial(cls, order: VariableOrder, exps: Exponents, coeff: int = 1) -> "Polynomial":
        if coeff == 0:
            return cls.zero(order)
        return cls._raw(order, {tuple(exps): coeff})

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return self._d

    def sorted_terms(self) -> Tuple[Tuple[Exponents, int], ...]:
        """Terms sorted descending under the lex order."""
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self._d.items(), key=lambda kv: _revkey(kv[0]), reverse=True)
            )
        return self._sorted

    @property
    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self) -> bool:
        return bool(self._d)

    @property
    def is_constant(self) -> bool:
        if not self._d:
            return True
        if len(self._d) != 1:
            return False
        (exps,) = self._d
        return not any(exps)

    def constant_value(self) -> int:
        if self.is_zero:
            return 0
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return next(iter(self._d.values()))

    @property
    def term_count(self) -> int:
        return len(self._d)

    def degree_tuple(self) -> Tuple[int, ...]:
        if self._degrees is None:
            n = len(self.order)
            degs = [0] * n
            for exps in self._d:
                for i, e in enumerate(exps):
                    if e > degs[i]:
                        degs[i] = e
            self._degrees = tuple(degs)
        return self._degrees

    def degree_in(self, var: int) -> int:
        """Degree in the given variable index; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return self.degree_tuple()[var]

    def leading_variable_index(self) -> Optional[int]:
        """0-based index of the highest variable present, None for constants."""
        if self.is_constant:
            return None
        degs = self.degree_tuple()
        for i in range(len(degs) - 1, -1, -1):
            if degs[i]:
                return i
        return None

    @property
    def poly_class(self) -> int:
        """1-based index of the leading variable; 0 for non-zero constants."""
        idx = self.leading_variable_index()
        return 0 if idx is None else idx + 1

    @property
    def leading_degree(self) -> int:
        idx = self.leading_variable_index()
        if idx is None:
            raise ValueError("constant polynomial has no leading degree")
        return self.degree_tuple()[idx]

    @property
    def initial(self) -> "Polynomial":
        """Leading coefficient w.r.t. the leading variable, with it removed."""
        idx = self.leading_variable_index()
        if idx is None:
            raise ValueError("constant polynomial has no initial")
        return self.coefficient_in(idx, self.degree_tuple()[idx])

    def coefficient_in(self, var: int, power: int) -> "Polynomial":
        """Coefficient of ``x_var ** power``; the variable is stripped."""
        d: Dict[Exponents, int] = {}
        for exps, coeff in self._d.items():
            if exps[var] == power:
                stripped = exps[:var] + (0,) + exps[var + 1 :]
                d[stripped] = coeff
        return Polynomial._raw(self.order, d)

    def coefficients_in(self, var: int) -> Dict[int, "Polynomial"]:
        """All coefficients indexed by the power of ``x_var``."""
        buckets: Dict[int, Dict[Exponents, int]] = {}
        for exps, coeff in self._d.items():
            stripped = exps[:var] + (0,) + exps[var + 1 :]
            buckets.setdefault(exps[var], {})[stripped] = coeff
        return {k: Polynomial._raw(self.order, d) for k, d in buckets.items()}

    def head_exponents(self) -> Exponents:
        if self.is_zero:
            raise ValueError("zero polynomial has no head term")
        return max(self._d, key=_revkey)

    def head_coefficient(self) -> int:
        return self._d[self.head_exponents()]

    def is_univariate_in(self, var: int) -> bool:
        """Non-constant and involving no variable other than ``x_var``."""
        if self.is_constant:
            return False
        for exps in self._d:
            for i, e in enumerate(exps):
                if e and i != var:
                    return False
        return self.degree_tuple()[var] > 0

    def max_coeff_digits(self) -> int:
        if self.is_zero:
            return 0
        return max(len(str(abs(c))) for c in self._d.values())

    def measure(self) -> Measure:
        if self.is_zero:
            return Measure(0, None, 0, None, (0,) * len(self.order), 0, None, 0, True)
        idx = self.leading_variable_index()
        head = self.head_exponents()
        if idx is None:
            return Measure(
                0, None, 0, None, self.degree_tuple(), self.term_count,
                (head, self._d[head]), self.max_coeff_digits(),
            )
        return Measure(
            idx + 1,
            self.order.names[idx],
            self.degree_tuple()[idx],
            self.initial,
            self.degree_tuple(),
            self.term_count,
            (head, self._d[head]),
            self.max_coeff_digits(),
        )

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.order is not other.order and self.order != other.order:
            raise ValueError("polynomials belong to different variable orders")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        d = dict(self._d)
        for exps, coeff in other._d.items():
            s = d.get(exps, 0) + coeff
            if s:
                d[exps] = s
            elif exps in d:
                del d[exps]
        return Polynomial._raw(self.order, d)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        d = dict(self._d)
        for exps, coeff in other._d.items():
            s = d.get(exps, 0) - coeff
            if s:
                d[exps] = s
            elif exps in d:
                del d[exps]
        return Polynomial._raw(self.order, d)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.order, {e: -c for e, c in self._d.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.order)
            return Polynomial._raw(self.order, {e: c * other for e, c in self._d.items()})
        self._check(other)
        if not self._d or not other._d:
            return Polynomial.zero(self.order)
        d: Dict[Exponents, int] = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                key = monomial_mul(e1, e2)
                s = d.get(key, 0) + c1 * c2
                if s:
                    d[key] = s
                elif key in d:
                    del d[key]
        return Polynomial._raw(self.order, d)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def times_monomial(self, exps: Exponents, coeff: int = 1) -> "Polynomial":
        if coeff == 0:
            return Polynomial.zero(self.order)
        return Polynomial._raw(
            self.order, {monomial_mul(e, exps): c * coeff for e, c in self._d.items()}
        )

    # -- normalization -----------------------------------------------------

    def content(self) -> int:
        g = 0
        for c in self._d.values():
            g = _int_gcd(g, c)
            if g == 1:
                break
        return g

    def normalized(self) -> "Polynomial":
        """Primitive representative with positive leading coefficient.

        Non-zero constants only have their sign fixed: their magnitude is the
        payload of contradiction reporting and is kept intact.
        """
        if self.is_zero:
            return self
        if self.is_constant:
            v = self.constant_value()
            return self if v > 0 else -self
        g = self.content()
        if self.head_coefficient() < 0:
            g = -g
        if g == 1:
            return self
        return Polynomial._raw(self.order, {e: c // g for e, c in self._d.items()})

    def normalization_factors(self) -> Tuple[int, int]:
        """Return ``(sign, content)`` with ``self == sign*content*normalized``."""
        if self.is_zero:
            return 1, 1
        if self.is_constant:
            return (1, 1) if self.constant_value() > 0 else (-1, 1)
        g = self.content()
        sign = 1 if self.head_coefficient() > 0 else -1
        return sign, g

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point (one coordinate per variable)."""
        if len(point) != len(self.order):
            raise ValueError("point dimension does not match variable count")
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self._d.items():
            term = Fraction(coeff)
            for e, v in zip(exps, vals):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.order.names == other.order.names and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order.names, frozenset(self._d.items())))
        return self._hash

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, (exps, coeff) in enumerate(self.sorted_terms()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            factors = [
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(self.order.names, exps)
                if e
            ]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def format_power_product(order: VariableOrder, exps: Exponents) -> str:
    """Compact rendering of a power product, e.g. ``w^2x^3y``; ``1`` if empty."""
    parts = [
        f"{name}^{e}" if e > 1 else name for name, e in zip(order.names, exps) if e
    ]
    return "".join(parts) if parts else "1"


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient ``q`` with ``q*b == a``; raises ExactDivisionError otherwise."""
    if b.is_zero:
        raise ZeroDivisionError("exact division by the zero polynomial")
    a._check(b)
    if a.is_zero:
        return a
    if b.is_constant:
        v = b.constant_value()
        d = {}
        for exps, coeff in a.terms.items():
            q, r = divmod(coeff, v)
            if r:
                raise ExactDivisionError(f"{coeff} not divisible by {v}")
            d[exps] = q
        return Polynomial._raw(a.order, d)
    head_b = b.head_exponents()
    lc_b = b.head_coefficient()
    rem = dict(a.terms)
    quot: Dict[Exponents, int] = {}
    while rem:
        head_r = max(rem, key=_revkey)
        coeff_r = rem[head_r]
        if not monomial_divides(head_b, head_r):
            raise ExactDivisionError("division is not exact (head monomial defect)")
        q, r = divmod(coeff_r, lc_b)
        if r:
            raise ExactDivisionError("division is not exact (head coefficient defect)")
        e_q = monomial_div(head_r, head_b)
        quot[e_q] = q
        for exps, coeff in b.terms.items():
            key = monomial_mul(exps, e_q)
            s = rem.get(key, 0) - q * coeff
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return Polynomial._raw(a.order, quot)


def _pseudo_remainder(p: Polynomial, q: Polynomial, var: int) -> Polynomial:
    """Pseudo-remainder of ``p`` by ``q`` in ``x_var`` (internal, gcd use)."""
    d = q.degree_in(var)
    lc_q = q.coefficient_in(var, d)
    r = p
    while not r.is_zero and r.degree_in(var) >= d:
        dr = r.degree_in(var)
        lc_r = r.coefficient_in(var, dr)
        shift = [0] * len(p.order)
        shift[var] = dr - d
        r = r * lc_q - q * lc_r.times_monomial(tuple(shift))
    return r


def _content_wrt(p: Polynomial, var: int) -> Polynomial:
    g = Polynomial.zero(p.order)
    for _, coeff_poly in sorted(p.coefficients_in(var).items()):
        g = _gcd_rec(g, coeff_poly)
        if g.is_constant and not g.is_zero and abs(g.constant_value()) == 1:
            break
    return g


def _gcd_rec(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.is_constant and b.is_constant:
        return Polynomial.constant(a.order, _int_gcd(a.constant_value(), b.constant_value()))
    ia = a.leading_variable_index()
    ib = b.leading_variable_index()
    var = max(v for v in (ia, ib) if v is not None)
    if a.degree_in(var) <= 0:
        return _gcd_rec(a, _content_wrt(b, var))
    if b.degree_in(var) <= 0:
        return _gcd_rec(b, _content_wrt(a, var))
    ca = _content_wrt(a, var)
    cb = _content_wrt(b, var)
    cg = _gcd_rec(ca, cb)
    f = exact_divide(a, ca)
    g = exact_divide(b, cb)
    if f.degree_in(var) < g.degree_in(var):
        f, g = g, f
    while not g.is_zero:
        r = _pseudo_remainder(f, g, var)
        if not r.is_zero:
            r = exact_divide(r, _content_wrt(r, var))
        f, g = g, r
    return cg * f


def multivariate_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive, positive-leading gcd over the rationals.

    Since non-zero constants are units over the rationals, a constant gcd is
    returned as 1.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials")
    g = _gcd_rec(a, b)
    if g.is_constant:
        return Polynomial.one(a.order)
    return g.normalized()
