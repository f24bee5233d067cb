"""Tests for the sparse polynomial core.

Division and gcd are checked three ways: frozen worked examples, algebraic
laws on random inputs, and a brute-force divider that solves for quotient
coefficients by exact linear algebra over the quotient exponent box.
"""

import math
import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bidlab.poly import (
    ContextMismatchError,
    Polynomial,
    Rational,
    RationalFunction,
    UnsupportedContextError,
    canonical,
    exact_divide,
    format_polynomial,
    in_row_span,
    multivar_gcd,
    nullspace_basis,
    parity_split,
    parse_polynomial,
    poly_lcm,
    row_reduce,
)


def P(text, names=("x", "y"), laurent=None):
    if laurent is None:
        laurent = (False,) * len(names)
    return parse_polynomial(text, names, laurent)


def random_poly(rng, names, flags, max_terms=3, span=1):
    acc = {}
    for _ in range(rng.randrange(max_terms + 1)):
        e = tuple(rng.randrange(-span if f else 0, span + 1) for f in flags)
        acc[e] = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
    return Polynomial.make(names, flags, acc)


def brute_divide(p, q):
    """Solve p = r*q for r by linear algebra over the quotient box.

    Independent of the production routine: unknowns are the coefficients of
    r on every box exponent, equations match coefficients of r*q against p.
    Returns None when the system has no solution.
    """
    n = len(p.vars)
    if p.is_zero():
        return Polynomial.zero(p.vars, p.laurent)
    lo = [p.min_exponent(i) - q.min_exponent(i) for i in range(n)]
    hi = [p.max_exponent(i) - q.max_exponent(i) for i in range(n)]
    for i in range(n):
        if lo[i] > hi[i]:
            return None
        if lo[i] < 0 and not p.laurent[i]:
            return None
    box = list(product(*[range(lo[i], hi[i] + 1) for i in range(n)]))
    rows = sorted({tuple(a + b for a, b in zip(e, f))
                   for e in box for f, _ in q.terms})
    row_index = {e: k for k, e in enumerate(rows)}
    mat = [[Fraction(0)] * (len(box) + 1) for _ in rows]
    for j, e in enumerate(box):
        for f, c in q.terms:
            mat[row_index[tuple(a + b for a, b in zip(e, f))]][j] += c
    for e, c in p.terms:
        if e not in row_index:
            return None
        mat[row_index[e]][-1] = c
    m, w = len(mat), len(box)
    rank = 0
    pivots = []
    for col in range(w):
        piv = next((k for k in range(rank, m) if mat[k][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for k in range(m):
            if k != rank and mat[k][col]:
                f = mat[k][col]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    for k in range(rank, m):
        if mat[k][-1]:
            return None
    sol = [Fraction(0)] * w
    for k, col in enumerate(pivots):
        sol[col] = mat[k][-1]
    cand = Polynomial.make(p.vars, p.laurent,
                           {e: sol[j] for j, e in enumerate(box)})
    if not (cand * q - p).is_zero():
        return None
    return cand


@st.composite
def polys(draw, names=("x", "y"), flags=(False, False), span=2):
    acc = {}
    for _ in range(draw(st.integers(0, 4))):
        e = tuple(draw(st.integers(-span if f else 0, span)) for f in flags)
        num = draw(st.integers(-6, 6))
        den = draw(st.integers(1, 4))
        acc[e] = acc.get(e, 0) + Fraction(num, den)
    return Polynomial.make(names, flags, acc)


class TestPolynomialBasics:
    def test_make_merges_and_drops_zeros(self):
        p = Polynomial.make(("x",), (False,), {(1,): Fraction(2)})
        q = Polynomial.make(("x",), (False,), {(1,): Fraction(-2)})
        assert (p + q).is_zero()

    def test_negative_exponent_rejected_without_flag(self):
        with pytest.raises(ValueError):
            Polynomial.make(("x",), (False,), {(-1,): Fraction(1)})

    def test_grlex_leading_term(self):
        p = P("x^2 + x*y^2")
        assert p.leading_term()[0] == (1, 2)

    def test_substitute_zero(self):
        p = P("x^2*y + x + 3")
        assert p.substitute_zero("y") == P("x + 3")

    def test_substitute_zero_rejects_pole(self):
        q = parse_polynomial("x^-1 + y", ("x", "y"), (True, False))
        with pytest.raises(ZeroDivisionError):
            q.substitute_zero("x")

    def test_extend_embeds(self):
        p = parse_polynomial("x + 1", ("x",), (False,))
        assert p.extend(("x", "y"), (False, False)) == P("x + 1")

    def test_extend_keeps_laurent_flags(self):
        p = parse_polynomial("x^-1", ("x",), (True,))
        with pytest.raises(ContextMismatchError):
            p.extend(("x", "y"), (False, False))

    def test_pow(self):
        assert P("x + y") ** 2 == P("x^2 + 2*x*y + y^2")


class TestExactDivide:
    def test_polynomial_quotient(self):
        assert exact_divide(P("x^4 - y^2"), P("x^2 - y")) == P("x^2 + y")

    def test_rejects_non_factor(self):
        assert exact_divide(P("x^2 + 1"), P("x + 1")) is None

    def test_laurent_monomial_divisor(self):
        p = parse_polynomial("x^2 + 1", ("x",), (True,))
        q = parse_polynomial("x", ("x",), (True,))
        assert exact_divide(p, q) == parse_polynomial(
            "x + x^-1", ("x",), (True,))

    def test_ordinary_ring_blocks_negative_exponents(self):
        p = parse_polynomial("x^2 + 1", ("x",), (False,))
        q = parse_polynomial("x", ("x",), (False,))
        assert exact_divide(p, q) is None

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(P("x"), P("0"))

    def test_zero_dividend(self):
        assert exact_divide(P("0"), P("x")).is_zero()

    def test_context_mismatch(self):
        with pytest.raises(ContextMismatchError):
            exact_divide(P("x + y"), parse_polynomial("x", ("x",), (False,)))

    def test_agrees_with_brute_force_solver(self):
        rng = random.Random(20260822)
        names, flags = ("x", "y"), (False, True)
        for _ in range(120):
            p = random_poly(rng, names, flags)
            q = random_poly(rng, names, flags)
            if q.is_zero():
                continue
            if rng.random() < 0.5:
                p = p * q  # guarantee a quotient on half the runs
            assert exact_divide(p, q) == brute_divide(p, q)

    @given(polys(), polys())
    def test_multiply_then_divide_roundtrip(self, p, q):
        if q.is_zero():
            return
        assert exact_divide(p * q, q) == p

    @given(polys(flags=(True, True), span=2), polys(flags=(True, True), span=2))
    def test_roundtrip_with_laurent_variables(self, p, q):
        if q.is_zero():
            return
        assert exact_divide(p * q, q) == p

    @given(polys(), polys())
    def test_successful_division_is_sound(self, p, q):
        if q.is_zero():
            return
        r = exact_divide(p, q)
        if r is not None:
            assert r * q == p


class TestGcd:
    def test_monomial_common_factor(self):
        names, flags = ("x1", "x2", "x3"), (False,) * 3
        p = parse_polynomial("x1*x2", names, flags)
        q = parse_polynomial("x1*x3", names, flags)
        assert multivar_gcd(p, q) == parse_polynomial("x1", names, flags)

    def test_binomial_gcd_through_prs(self):
        assert multivar_gcd(P("x^2 - y^2"),
                            P("x^2 + 2*x*y + y^2")) == P("x + y")

    def test_gcd_with_zero_is_canonical_form(self):
        assert multivar_gcd(P("2/3*x^2 - 2/3"), P("0")) == P("x^2 - 1")
        assert multivar_gcd(P("0"), P("0")).is_zero()

    def test_canonical_flips_sign(self):
        assert canonical(P("-x + 1")) == P("x - 1")

    def test_laurent_context_rejected(self):
        x = parse_polynomial("x", ("x",), (True,))
        sq = parse_polynomial("x^2", ("x",), (True,))
        with pytest.raises(UnsupportedContextError):
            multivar_gcd(x, sq)

    @given(polys(), polys())
    @settings(deadline=None)
    def test_divides_both_inputs(self, p, q):
        g = multivar_gcd(p, q)
        if g.is_zero():
            assert p.is_zero() and q.is_zero()
            return
        assert exact_divide(p, g) is not None
        assert exact_divide(q, g) is not None

    @given(polys(), polys())
    @settings(deadline=None)
    def test_symmetric(self, p, q):
        assert multivar_gcd(p, q) == multivar_gcd(q, p)

    @given(polys(span=1), polys(span=1), polys(span=1))
    @settings(deadline=None, max_examples=50)
    def test_multiplicative_in_common_factors(self, p, q, d):
        lhs = multivar_gcd(p * d, q * d)
        rhs = multivar_gcd(p, q) * d
        if rhs.is_zero():
            assert lhs.is_zero()
        else:
            assert lhs == canonical(rhs)


class TestLcm:
    def test_worked_example(self):
        assert poly_lcm(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == \
            P("x^3 + x^2*y - x*y^2 - y^3")

    @given(polys(span=1), polys(span=1))
    @settings(deadline=None, max_examples=50)
    def test_product_law(self, p, q):
        l = poly_lcm(p, q)
        if p.is_zero() or q.is_zero():
            assert l.is_zero()
            return
        assert canonical(l * multivar_gcd(p, q)) == canonical(p * q)


class TestParitySplit:
    def test_worked_example(self):
        names, flags = ("x1", "x2", "x3"), (False,) * 3
        even, odd = parity_split(parse_polynomial("x1 + x2*x3", names, flags))
        assert even == parse_polynomial("x2*x3", names, flags)
        assert odd == parse_polynomial("x1", names, flags)

    @given(polys(), polys())
    def test_additive(self, p, q):
        pe, po = parity_split(p)
        qe, qo = parity_split(q)
        se, so = parity_split(p + q)
        assert se == pe + qe
        assert so == po + qo

    @given(polys(flags=(True, False)))
    def test_parts_recombine_and_are_pure(self, p):
        even, odd = parity_split(p)
        assert even + odd == p
        assert all(sum(e) % 2 == 0 for e, _ in even.terms)
        assert all(sum(e) % 2 == 1 for e, _ in odd.terms)


class TestTextForm:
    def test_canonical_layout(self):
        assert format_polynomial(P("x^2*y - 3/2*x + 1")) == "x^2*y - 3/2*x + 1"

    def test_negative_exponent_form(self):
        p = parse_polynomial("x3^-2", ("x3",), (True,))
        assert format_polynomial(p) == "x3^-2"

    def test_zero(self):
        assert format_polynomial(P("0")) == "0"
        assert P("0").is_zero()

    def test_unknown_variable_rejected(self):
        with pytest.raises(ValueError):
            P("z + 1")

    def test_negative_exponent_needs_laurent_flag(self):
        with pytest.raises(ValueError):
            parse_polynomial("x^-1", ("x",), (False,))

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            P("x $ y")
        with pytest.raises(ValueError):
            P("x + ")
        with pytest.raises(ValueError):
            P("")

    @given(polys(flags=(True, False)))
    def test_roundtrip(self, p):
        assert parse_polynomial(format_polynomial(p), p.vars, p.laurent) == p


class TestRationalFunction:
    def test_cancellation(self):
        f = RationalFunction.make(P("x^2 - y^2"), P("x + y"))
        assert f == RationalFunction.make(P("x - y"), P("1"))

    def test_denominator_is_normalised(self):
        f = RationalFunction.make(P("x"), P("2*y"))
        g = RationalFunction.make(P("3*x"), P("6*y"))
        assert f == g
        assert f.den == P("y")
        assert f.num == P("1/2*x")

    def test_zero_numerator(self):
        f = RationalFunction.make(P("0"), P("x + 1"))
        assert f.is_zero()
        assert f.den == P("1")

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction.make(P("1"), P("0"))

    @given(polys(span=1), polys(span=1), polys(span=1))
    @settings(deadline=None, max_examples=40)
    def test_field_laws(self, a, b, c):
        if c.is_zero():
            return
        f = RationalFunction.make(a, c)
        g = RationalFunction.make(b, c)
        assert f + g == RationalFunction.make(a + b, c)
        assert f * g == RationalFunction.make(a * b, c * c)
        assert (f - f).is_zero()


class TestRationalScalars:
    def test_is_stdlib_fraction(self):
        assert Rational is Fraction

    @given(st.integers(-50, 50), st.integers(1, 50),
           st.integers(-50, 50), st.integers(1, 50))
    def test_cross_multiplication_oracle(self, a, b, c, d):
        x = Rational(a, b)
        y = Rational(c, d)
        assert (x == y) == (a * d == c * b)
        s = x + y
        assert s.numerator * (b * d) == (a * d + c * b) * s.denominator
        assert s.denominator > 0
        assert math.gcd(s.numerator, s.denominator) == 1


def random_matrix(rng, rows, cols):
    return [[Fraction(rng.randint(-3, 3), rng.randint(1, 3))
             for _ in range(cols)] for _ in range(rows)]


class TestLinearAlgebra:
    def test_row_reduce_is_canonical_for_the_span(self):
        a = [[1, 2, 3], [0, 1, 1]]
        b = [[1, 3, 4], [2, 5, 7], [1, 2, 3]]  # same row space
        assert row_reduce(a) == row_reduce(b)

    def test_in_row_span(self):
        rows = [[1, 0, 1], [0, 1, 1]]
        assert in_row_span(rows, [2, 3, 5])
        assert not in_row_span(rows, [0, 0, 1])

    def test_nullspace_worked_example(self):
        # x + y + z = 0 has the plane spanned by (-1,1,0) and (-1,0,1)
        basis = nullspace_basis([[1, 1, 1]], 3)
        assert len(basis) == 2
        for v in basis:
            assert sum(v) == 0

    def test_rank_nullity_and_kernel_on_random_matrices(self):
        rng = random.Random(822)
        for _ in range(60):
            m, n = rng.randint(1, 4), rng.randint(1, 5)
            mat = random_matrix(rng, m, n)
            rref = row_reduce(mat)
            null = nullspace_basis(mat, n)
            assert len(rref) + len(null) == n
            for v in null:
                for row in mat:
                    assert sum(a * b for a, b in zip(row, v)) == 0
            for row in mat:
                assert in_row_span(rref, row)

    def test_span_membership_of_random_combinations(self):
        rng = random.Random(823)
        for _ in range(40):
            mat = random_matrix(rng, 3, 4)
            combo = [Fraction(0)] * 4
            for row in mat:
                c = Fraction(rng.randint(-2, 2))
                combo = [a + c * b for a, b in zip(combo, row)]
            assert in_row_span(mat, combo)
