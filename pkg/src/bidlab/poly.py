"""Exact sparse polynomial arithmetic over the rationals.

Scalars are `fractions.Fraction` throughout, re-exported as `Rational`;
nothing in this package ever touches a float.  `Polynomial` keeps its terms
as a tuple of (exponent vector, coefficient) pairs sorted by graded
lexicographic order, largest first, so structural equality and hashing agree
with mathematical equality.  A per-variable flag marks Laurent variables,
which may carry negative exponents; all other exponents are kept
nonnegative by the constructors.

The two workhorse algorithms live here as well: `exact_divide`, a
single-divisor division that either returns the exact quotient or proves
there is none, and `multivar_gcd`, a primitive pseudo-remainder sequence
with explicit content bookkeeping.  Division stays exact and terminating
when Laurent variables are in play; the gcd is defined over ordinary
polynomial variables only and refuses Laurent contexts, where monomials
are units and "the" gcd stops being meaningful.

A small exact linear-algebra toolkit (reduced row echelon form, span
tests, nullspace bases over the rationals) lives at the bottom; the
even-subspace and k+m oracles lean on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm

__all__ = [
    "Rational",
    "Exponent",
    "Polynomial",
    "RationalFunction",
    "ContextMismatchError",
    "UnsupportedContextError",
    "exact_divide",
    "multivar_gcd",
    "canonical",
    "parity_split",
    "poly_lcm",
    "parse_polynomial",
    "format_polynomial",
    "row_reduce",
    "in_row_span",
    "nullspace_basis",
]

Rational = Fraction

Exponent = tuple[int, ...]

_ZERO = Fraction(0)


class ContextMismatchError(ValueError):
    """Operands live over different variable contexts."""


class UnsupportedContextError(ValueError):
    """The requested operation is outside the supported fragment."""


def _grlex(e: Exponent):
    # graded lexicographic: total degree first, then entries left to right
    return (sum(e), e)


def _sorted_terms(acc: dict) -> tuple:
    return tuple(sorted(acc.items(), key=lambda t: _grlex(t[0]), reverse=True))


@dataclass(frozen=True)
class Polynomial:
    """Immutable sparse polynomial; see the module docstring for layout."""

    vars: tuple[str, ...]
    laurent: tuple[bool, ...]
    terms: tuple[tuple[Exponent, Fraction], ...]

    def __post_init__(self) -> None:
        if len(self.vars) != len(self.laurent):
            raise ContextMismatchError("need one Laurent flag per variable")

    # -- construction ------------------------------------------------------

    @classmethod
    def make(cls, names, laurent, coeffs) -> "Polynomial":
        """Build a polynomial from an exponent -> coefficient mapping.

        Zero coefficients are dropped and repeated exponents are summed, so
        any mapping yields the one canonical term tuple.
        """
        names = tuple(names)
        flags = tuple(bool(f) for f in laurent)
        if len(set(names)) != len(names):
            raise ContextMismatchError("duplicate variable name")
        if len(names) != len(flags):
            raise ContextMismatchError("need one Laurent flag per variable")
        acc: dict[Exponent, Fraction] = {}
        for exp, coeff in coeffs.items():
            exp = tuple(int(k) for k in exp)
            if len(exp) != len(names):
                raise ContextMismatchError("exponent arity != variable count")
            for k, flag in zip(exp, flags):
                if k < 0 and not flag:
                    raise ValueError(
                        "negative exponent in a non-Laurent variable")
            coeff = Fraction(coeff)
            if exp in acc:
                coeff = acc[exp] + coeff
            if coeff:
                acc[exp] = coeff
            else:
                acc.pop(exp, None)
        return cls(names, flags, _sorted_terms(acc))

    @classmethod
    def zero(cls, names, laurent) -> "Polynomial":
        return cls.make(names, laurent, {})

    @classmethod
    def constant(cls, names, laurent, value) -> "Polynomial":
        names = tuple(names)
        return cls.make(names, laurent, {(0,) * len(names): Fraction(value)})

    @classmethod
    def one(cls, names, laurent) -> "Polynomial":
        return cls.constant(names, laurent, 1)

    @classmethod
    def monomial(cls, names, laurent, exponent, coeff=1) -> "Polynomial":
        return cls.make(names, laurent, {tuple(exponent): Fraction(coeff)})

    # -- views --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def same_context(self, other: "Polynomial") -> bool:
        return self.vars == other.vars and self.laurent == other.laurent

    def _join(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if not self.same_context(other):
            raise ContextMismatchError(
                f"contexts differ: {self.vars} vs {other.vars}")

    def leading_term(self) -> tuple[Exponent, Fraction]:
        """Grlex-largest term; undefined for the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def total_degree(self) -> int | None:
        if not self.terms:
            return None
        return sum(self.terms[0][0])

    def min_exponent(self, i: int) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        return min(e[i] for e, _ in self.terms)

    def max_exponent(self, i: int) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponent range")
        return max(e[i] for e, _ in self.terms)

    def coefficient(self, exponent) -> Fraction:
        exponent = tuple(exponent)
        for e, c in self.terms:
            if e == exponent:
                return c
        return _ZERO

    def coefficient_map(self, name: str) -> dict[int, "Polynomial"]:
        """Coefficients of the powers of one variable, that variable zeroed."""
        i = self.vars.index(name)
        acc: dict[int, dict] = {}
        for e, c in self.terms:
            stripped = e[:i] + (0,) + e[i + 1:]
            acc.setdefault(e[i], {})[stripped] = c
        return {k: Polynomial(self.vars, self.laurent, _sorted_terms(v))
                for k, v in acc.items()}

    def degree_in(self, name: str) -> int:
        """Largest exponent of one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e, _ in self.terms)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vars, self.laurent,
                          tuple((e, -c) for e, c in self.terms))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._join(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            s = acc.get(e, _ZERO) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return Polynomial(self.vars, self.laurent, _sorted_terms(acc))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._join(other)
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, _ZERO) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return Polynomial(self.vars, self.laurent, _sorted_terms(acc))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        out = Polynomial.one(self.vars, self.laurent)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, value) -> "Polynomial":
        value = Fraction(value)
        if not value:
            return Polynomial(self.vars, self.laurent, ())
        return Polynomial(self.vars, self.laurent,
                          tuple((e, c * value) for e, c in self.terms))

    def shift(self, delta) -> "Polynomial":
        """Multiply by the monomial with exponent vector `delta`."""
        delta = tuple(delta)
        if len(delta) != len(self.vars):
            raise ContextMismatchError("shift arity != variable count")
        acc = {}
        for e, c in self.terms:
            moved = tuple(a + b for a, b in zip(e, delta))
            for k, flag in zip(moved, self.laurent):
                if k < 0 and not flag:
                    raise ValueError("shift drives a non-Laurent variable "
                                     "to a negative exponent")
            acc[moved] = c
        return Polynomial(self.vars, self.laurent, _sorted_terms(acc))

    def substitute_zero(self, name: str) -> "Polynomial":
        """Evaluate one variable at zero (a pole there is an error)."""
        i = self.vars.index(name)
        acc = {}
        for e, c in self.terms:
            if e[i] < 0:
                raise ZeroDivisionError(f"pole at {name} = 0")
            if e[i] == 0:
                acc[e] = c
        return Polynomial(self.vars, self.laurent, _sorted_terms(acc))

    def extend(self, names, laurent) -> "Polynomial":
        """Reinterpret in a larger variable context (old flags must agree)."""
        names = tuple(names)
        flags = tuple(bool(f) for f in laurent)
        pos = []
        for v, f in zip(self.vars, self.laurent):
            if v not in names:
                raise ContextMismatchError(f"variable {v} missing from target")
            j = names.index(v)
            if flags[j] != f:
                raise ContextMismatchError(f"Laurent flag changed for {v}")
            pos.append(j)
        acc = {}
        for e, c in self.terms:
            out = [0] * len(names)
            for j, k in zip(pos, e):
                out[j] = k
            acc[tuple(out)] = c
        return Polynomial.make(names, flags, acc)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial[{', '.join(self.vars)}]({format_polynomial(self)})"


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial | None:
    """Exact quotient p / q, or None when q does not divide p.

    Newton polytopes add under multiplication, so every exponent of a true
    quotient lies in the per-variable box [min(p) - min(q), max(p) - max(q)].
    The greedy loop enforces that box, which in turn pins every intermediate
    remainder monomial inside the box of p; the grlex-leading term then
    strictly decreases over a finite set, so the loop terminates even though
    Laurent exponents rule out the usual well-ordering argument.
    """
    p._join(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    n = len(p.vars)
    lo = [p.min_exponent(i) - q.min_exponent(i) for i in range(n)]
    hi = [p.max_exponent(i) - q.max_exponent(i) for i in range(n)]
    for i in range(n):
        if lo[i] > hi[i]:
            return None
        if lo[i] < 0 and not p.laurent[i]:
            return None
    qe, qc = q.leading_term()
    quo: dict[Exponent, Fraction] = {}
    rem = dict(p.terms)
    while rem:
        top = max(rem, key=_grlex)
        e = tuple(a - b for a, b in zip(top, qe))
        if any(not lo[i] <= e[i] <= hi[i] for i in range(n)):
            return None
        c = rem[top] / qc
        quo[e] = c
        for fe, fc in q.terms:
            ge = tuple(a + b for a, b in zip(e, fe))
            s = rem.get(ge, _ZERO) - c * fc
            if s:
                rem[ge] = s
            else:
                rem.pop(ge, None)
    return Polynomial(p.vars, p.laurent, _sorted_terms(quo))


def canonical(p: Polynomial) -> Polynomial:
    """Canonical associate of p.

    Laurent variables are shifted so their minimum exponent is zero (their
    monomials are units), coefficients are scaled to coprime integers, and
    the leading coefficient is made positive.  Every unit multiple of p maps
    to the same result, which is what `multivar_gcd` returns.
    """
    if p.is_zero():
        return p
    n = len(p.vars)
    delta = tuple(-p.min_exponent(i) if p.laurent[i] else 0 for i in range(n))
    if any(delta):
        p = p.shift(delta)
    nums = [c.numerator for _, c in p.terms]
    dens = [c.denominator for _, c in p.terms]
    p = p.scale(Fraction(_int_lcm(*dens), _int_gcd(*nums)))
    if p.leading_term()[1] < 0:
        p = p.scale(-1)
    return p


def _prem(a: Polynomial, b: Polynomial, name: str) -> Polynomial:
    """Pseudo-remainder of a by b in one variable.

    a is premultiplied by powers of b's leading coefficient as needed, so
    the reduction never leaves the polynomial ring.
    """
    i = a.vars.index(name)
    db = b.degree_in(name)
    lc_b = b.coefficient_map(name)[db]
    while not a.is_zero() and a.degree_in(name) >= db:
        da = a.degree_in(name)
        lc_a = a.coefficient_map(name)[da]
        step = [0] * len(a.vars)
        step[i] = da - db
        a = a * lc_b - b.shift(step) * lc_a
    return a


def _content_pp(p: Polynomial, name: str) -> tuple[Polynomial, Polynomial]:
    """Content and primitive part of p viewed as univariate in `name`."""
    coeffs = list(p.coefficient_map(name).values())
    content = coeffs[0]
    for c in coeffs[1:]:
        content = _gcd_nonneg(content, c)
    pp = exact_divide(p, content)
    assert pp is not None  # the content divides by construction
    return content, pp


def _gcd_nonneg(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive-PRS gcd for operands with nonnegative exponents only."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    main = None
    for i, name in enumerate(p.vars):
        if p.max_exponent(i) > 0 or q.max_exponent(i) > 0:
            main = name
            break
    if main is None:
        # both are rational constants, hence units
        return Polynomial.one(p.vars, p.laurent)
    cont_p, pp_p = _content_pp(p, main)
    cont_q, pp_q = _content_pp(q, main)
    cont = _gcd_nonneg(cont_p, cont_q)
    a, b = pp_p, pp_q
    if a.degree_in(main) < b.degree_in(main):
        a, b = b, a
    while not b.is_zero() and b.degree_in(main) > 0:
        r = _prem(a, b, main)
        if not r.is_zero():
            r = _content_pp(r, main)[1]
        a, b = b, r
    if b.is_zero():
        head = a
    else:
        # the chain bottomed out in a polynomial free of the main variable;
        # both sides are primitive there, so no common factor survives
        head = Polynomial.one(p.vars, p.laurent)
    return cont * head


def multivar_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Greatest common divisor, normalised via `canonical`.

    Defined over ordinary polynomial variables only.  In a Laurent context
    monomials are units, associates proliferate, and the PRS bookkeeping
    below loses its meaning, so such contexts are refused outright.  The
    shared monomial factor is restored explicitly after the shifted coprime
    cores are handled by the PRS.
    """
    p._join(q)
    if any(p.laurent):
        raise UnsupportedContextError(
            "gcd is not defined over Laurent variables")
    if p.is_zero() and q.is_zero():
        return p
    if p.is_zero():
        return canonical(q)
    if q.is_zero():
        return canonical(p)
    n = len(p.vars)
    common = tuple(min(p.min_exponent(i), q.min_exponent(i))
                   for i in range(n))
    p0 = p.shift(tuple(-p.min_exponent(i) for i in range(n)))
    q0 = q.shift(tuple(-q.min_exponent(i) for i in range(n)))
    g = _gcd_nonneg(p0, q0)
    return canonical(g.shift(common))


def parity_split(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Split p into its (even, odd) total-degree parts; they sum back to p."""
    even = {e: c for e, c in p.terms if sum(e) % 2 == 0}
    odd = {e: c for e, c in p.terms if sum(e) % 2 != 0}
    return (Polynomial(p.vars, p.laurent, _sorted_terms(even)),
            Polynomial(p.vars, p.laurent, _sorted_terms(odd)))


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    """Least common multiple, canonically normalised (zero if either is)."""
    p._join(q)
    if p.is_zero() or q.is_zero():
        return Polynomial.zero(p.vars, p.laurent)
    g = multivar_gcd(p, q)
    quot = exact_divide(p * q, g)
    assert quot is not None
    return canonical(quot)


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of two polynomials, held in canonical form (see `make`)."""

    num: Polynomial
    den: Polynomial

    @classmethod
    def make(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        """Canonical representative of num/den.

        Numerator and denominator are made coprime, then the denominator is
        scaled to coprime integer coefficients with positive leading sign,
        the numerator absorbing the compensating unit.  Equal fractions
        compare equal structurally.  Laurent contexts are refused, since
        the reduction runs through `multivar_gcd`; a negative power is a
        denominator here, not a Laurent exponent.
        """
        num._join(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls(num, Polynomial.one(num.vars, num.laurent))
        g = multivar_gcd(num, den)
        num2 = exact_divide(num, g)
        den2 = exact_divide(den, g)
        assert num2 is not None and den2 is not None
        nums = [c.numerator for _, c in den2.terms]
        dens = [c.denominator for _, c in den2.terms]
        s = Fraction(_int_lcm(*dens), _int_gcd(*nums))
        if den2.leading_term()[1] < 0:
            s = -s
        return cls(num2.scale(s), den2.scale(s))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.one(p.vars, p.laurent))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.num.scale(-1), self.den)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            self.num * other.den + other.num * self.den,
            self.den * other.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(self.num * other.num,
                                     self.den * other.den)

    def __str__(self) -> str:
        if self.den == Polynomial.one(self.den.vars, self.den.laurent):
            return format_polynomial(self.num)
        return f"({format_polynomial(self.num)}) / ({format_polynomial(self.den)})"


# -- exact linear algebra -----------------------------------------------------
#
# Plain Gauss-Jordan over Fraction.  Rows are sequences of rationals; all
# three helpers treat the row space, so two generating sets for the same
# subspace produce identical reduced forms.


def row_reduce(rows) -> list[list[Fraction]]:
    """Reduced row echelon form of the row space, zero rows dropped.

    The result is canonical for the subspace spanned by `rows`: same span,
    same output, entry for entry.
    """
    work = [[Fraction(x) for x in r] for r in rows]
    if not work:
        return []
    width = len(work[0])
    if any(len(r) != width for r in work):
        raise ValueError("ragged matrix")
    out: list[list[Fraction]] = []
    col = 0
    while work and col < width:
        pivot = next((i for i, r in enumerate(work) if r[col]), None)
        if pivot is None:
            col += 1
            continue
        row = work.pop(pivot)
        row = [x / row[col] for x in row]
        for r in work:
            if r[col]:
                f = r[col]
                for j in range(col, width):
                    r[j] -= f * row[j]
        for r in out:
            if r[col]:
                f = r[col]
                for j in range(col, width):
                    r[j] -= f * row[j]
        out.append(row)
        work = [r for r in work if any(r)]
        col += 1
    return out


def in_row_span(rows, vec) -> bool:
    """Whether `vec` lies in the row space of `rows`."""
    base = row_reduce(rows)
    v = [Fraction(x) for x in vec]
    if base and len(v) != len(base[0]):
        raise ValueError("vector width differs from matrix width")
    for r in base:
        lead = next(j for j, x in enumerate(r) if x)
        if v[lead]:
            f = v[lead]
            v = [a - f * b for a, b in zip(v, r)]
    return not any(v)


def nullspace_basis(rows, width: int) -> list[list[Fraction]]:
    """Basis of {v : M v = 0} for the matrix M given by `rows`.

    Each returned vector has a 1 in one free column and zeros in the other
    free columns, the standard back-substitution basis.
    """
    base = row_reduce(rows)
    if base and len(base[0]) != width:
        raise ValueError("vector width differs from matrix width")
    pivots = [next(j for j, x in enumerate(r) if x) for r in base]
    free = [j for j in range(width) if j not in pivots]
    out = []
    for f in free:
        v = [_ZERO] * width
        v[f] = Fraction(1)
        for r, p in zip(base, pivots):
            v[p] = -r[f]
        out.append(v)
    return out


# -- canonical text form ------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<number>\d+(?:/\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^])"
    r"|(?P<junk>\S)")


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form; `parse_polynomial` inverts it."""
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for e, c in p.terms:
        factors = []
        for name, k in zip(p.vars, e):
            if k == 0:
                continue
            factors.append(name if k == 1 else f"{name}^{k}")
        mag = -c if c < 0 else c
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag), *factors])
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def parse_polynomial(text: str, names, laurent) -> Polynomial:
    """Parse the canonical text form.

    Accepts sums of '*'-joined factors, where a factor is a rational number
    (like 3/4) or a variable with an optional integer exponent after '^'.
    Whitespace is free; anything else is an error.
    """
    names = tuple(names)
    flags = tuple(bool(f) for f in laurent)
    idx = {name: i for i, name in enumerate(names)}
    tokens: list[tuple[str, str]] = []
    for m in _TOKEN.finditer(text):
        if m.lastgroup == "junk":
            raise ValueError(f"unexpected character {m.group()!r}")
        tokens.append((m.lastgroup, m.group()))
    n = len(tokens)
    pos = 0

    def parse_term() -> tuple[Exponent, Fraction]:
        nonlocal pos
        coeff = Fraction(1)
        exp = [0] * len(names)
        while True:
            if pos >= n:
                raise ValueError("expected a factor")
            kind, val = tokens[pos]
            if kind == "number":
                coeff *= Fraction(val)
                pos += 1
            elif kind == "name":
                if val not in idx:
                    raise ValueError(f"unknown variable {val!r}")
                pos += 1
                k = 1
                if pos < n and tokens[pos] == ("op", "^"):
                    pos += 1
                    neg = pos < n and tokens[pos] == ("op", "-")
                    if neg:
                        pos += 1
                    if (pos >= n or tokens[pos][0] != "number"
                            or "/" in tokens[pos][1]):
                        raise ValueError("exponent must be an integer")
                    k = -int(tokens[pos][1]) if neg else int(tokens[pos][1])
                    pos += 1
                exp[idx[val]] += k
            else:
                raise ValueError(f"expected a factor, found {val!r}")
            if pos < n and tokens[pos] == ("op", "*"):
                pos += 1
                continue
            return tuple(exp), coeff

    acc: dict[Exponent, Fraction] = {}
    sign = Fraction(1)
    if pos < n and tokens[pos] in (("op", "+"), ("op", "-")):
        if tokens[pos][1] == "-":
            sign = -sign
        pos += 1
    if pos >= n:
        raise ValueError("empty polynomial text")
    while True:
        e, c = parse_term()
        acc[e] = acc.get(e, _ZERO) + sign * c
        if pos >= n:
            break
        kind, val = tokens[pos]
        if kind != "op" or val not in "+-":
            raise ValueError(f"expected + or -, found {val!r}")
        sign = Fraction(1) if val == "+" else Fraction(-1)
        pos += 1
    return Polynomial.make(names, flags, acc)
