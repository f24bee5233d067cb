"""Exponent monoids for the monomial ring families.

Four families cover everything the ideal engine needs: numerical semigroups
(Apery-set based, constant-time membership), root families (a seed with all
its base-power roots adjoined, closed-form membership), the even-total-degree
submonoid of N^d, and a generic finitely generated cone used mostly as a test
oracle.

Each class exposes the same small protocol: `member`, `divides`, `zero`,
`add`, `sub`, `sort_key`, `format_element`, `parse_element`, plus window
enumerators.  Elements are int for semigroups, Fraction for root families,
and int tuples for the vector monoids; `member` accepts anything in the
monoid's group of fractions, so negative or deep-denominator queries are
ordinary and simply answer False when appropriate.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

__all__ = [
    "MonoidDomainError",
    "UnsupportedMonoidError",
    "NumericalSemigroup",
    "RootFamily",
    "EvenDegree",
    "FinGenCone",
    "member",
    "divides",
    "conductor",
    "enumerate_up_to",
]


class MonoidDomainError(ValueError):
    """Query lies outside the monoid's group of fractions."""


class UnsupportedMonoidError(ValueError):
    """Monoid data the engine cannot work with."""


@dataclass(frozen=True)
class NumericalSemigroup:
    """Submonoid of N generated by globally coprime positive integers.

    The Apery set with respect to the multiplicity m (least generator)
    stores, for each residue r mod m, the least member congruent to r;
    membership and the conductor read off it directly.
    """

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted({int(g) for g in self.generators}))
        if not gens or gens[0] <= 0:
            raise UnsupportedMonoidError("generators must be positive")
        if gcd(*gens) != 1:
            raise UnsupportedMonoidError("generators must be globally coprime")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_apery", self._apery_set(gens))

    @staticmethod
    def _apery_set(gens):
        # shortest-path search on residues mod the multiplicity
        m = gens[0]
        dist = [None] * m
        dist[0] = 0
        heap = [(0, 0)]
        while heap:
            v, r = heapq.heappop(heap)
            if v > dist[r]:
                continue
            for g in gens:
                nr = (r + g) % m
                nv = v + g
                if dist[nr] is None or nv < dist[nr]:
                    dist[nr] = nv
                    heapq.heappush(heap, (nv, nr))
        return tuple(dist)

    def apery(self) -> tuple[int, ...]:
        return self._apery

    def member(self, v) -> bool:
        v = int(v)
        return v >= 0 and self._apery[v % self.generators[0]] <= v

    def divides(self, a, b) -> bool:
        return self.member(b - a)

    def conductor(self) -> int:
        """Least c with every integer >= c a member."""
        return max(self._apery) - self.generators[0] + 1

    def enumerate_up_to(self, bound) -> list[int]:
        return [v for v in range(int(bound) + 1) if self.member(v)]

    def group_range(self, lo, hi) -> list[int]:
        return list(range(ceil(Fraction(lo)), floor(Fraction(hi)) + 1))

    def zero(self):
        return 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def sort_key(self, v):
        return v

    def format_element(self, v) -> str:
        return str(v)

    def parse_element(self, text: str):
        return int(text)


@dataclass(frozen=True)
class RootFamily:
    """Nonnegative combinations of 1 (optional) and seed/base^m for m >= 0.

    Membership has a closed form.  Write q = n / base^k with k minimal;
    with the unit present, q is a member iff n >= t0 * base^k where t0 is
    the least nonnegative residue of n * base^(-k) mod seed, and without
    the unit iff seed divides n.  Both reduce to the coin problem over
    {base^k} u {seed * base^j : 0 <= j <= k} via a normalization step that
    collapses base copies of a deep coin into the next shallower one, and
    that step needs gcd(seed, base) = 1, which the constructor enforces.
    """

    base: int
    seed: int
    include_unit: bool = True

    def __post_init__(self):
        if self.base < 2 or self.seed < 1:
            raise UnsupportedMonoidError("need base >= 2 and seed >= 1")
        if gcd(self.seed, self.base) != 1:
            raise UnsupportedMonoidError("seed and base must be coprime")

    def level_of(self, q) -> int:
        """Least k with q * base^k integral; error for foreign denominators."""
        den = Fraction(q).denominator
        k = 0
        while den > 1:
            if den % self.base:
                raise MonoidDomainError(
                    f"denominator {Fraction(q).denominator} is not a power "
                    f"of {self.base}")
            den //= self.base
            k += 1
        return k

    def member(self, q) -> bool:
        q = Fraction(q)
        if q < 0:
            return False
        k = self.level_of(q)
        n = q.numerator
        if not self.include_unit:
            return n % self.seed == 0
        t0 = (n * pow(self.base, -k, self.seed)) % self.seed
        return n >= t0 * self.base ** k

    def divides(self, a, b) -> bool:
        return self.member(Fraction(b) - Fraction(a))

    def conductor(self) -> Fraction:
        """Least c with every group element >= c a member."""
        if not self.include_unit:
            raise UnsupportedMonoidError(
                "the unitless family has no conductor")
        return Fraction(self.seed - 1)

    def enumerate_up_to(self, bound, level: int) -> list[Fraction]:
        return [q for q in self.group_range(0, bound, level) if self.member(q)]

    def group_range(self, lo, hi, level: int) -> list[Fraction]:
        scale = self.base ** level
        lo_n = ceil(Fraction(lo) * scale)
        hi_n = floor(Fraction(hi) * scale)
        return [Fraction(n, scale) for n in range(lo_n, hi_n + 1)]

    def zero(self):
        return Fraction(0)

    def add(self, a, b):
        return Fraction(a) + Fraction(b)

    def sub(self, a, b):
        return Fraction(a) - Fraction(b)

    def sort_key(self, v):
        return v

    def format_element(self, v) -> str:
        return str(Fraction(v))

    def parse_element(self, text: str):
        return Fraction(text)


def _as_vec(v, dim):
    v = tuple(int(k) for k in v)
    if len(v) != dim:
        raise MonoidDomainError(f"expected arity {dim}, got {len(v)}")
    return v


@dataclass(frozen=True)
class EvenDegree:
    """Vectors in N^dim with even coordinate sum.

    This is the degree monoid of the subring generated by degree-two
    monomials.  The fixed dim is a working window onto countably many
    variables; the finiteness classifier layers that reading on top, here
    it is just a monoid.  Group elements (exponents of fraction-field
    monomials) always have even sum as well.
    """

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise UnsupportedMonoidError("dim must be positive")

    def member(self, v) -> bool:
        v = _as_vec(v, self.dim)
        return all(k >= 0 for k in v) and sum(v) % 2 == 0

    def divides(self, a, b) -> bool:
        return self.member(self.sub(b, a))

    def enumerate_up_to(self, bound) -> list[tuple[int, ...]]:
        out = [v for v in self._box((0,) * self.dim, (bound,) * self.dim)
               if sum(v) <= bound and self.member(v)]
        return sorted(out, key=self.sort_key)

    def group_range(self, lo, hi) -> list[tuple[int, ...]]:
        lo = _as_vec(lo, self.dim)
        hi = _as_vec(hi, self.dim)
        return [v for v in self._box(lo, hi) if sum(v) % 2 == 0]

    @staticmethod
    def _box(lo, hi):
        if any(a > b for a, b in zip(lo, hi)):
            return
        vec = list(lo)
        while True:
            yield tuple(vec)
            for i in range(len(vec) - 1, -1, -1):
                if vec[i] < hi[i]:
                    vec[i] += 1
                    break
                vec[i] = lo[i]
            else:
                return

    def zero(self):
        return (0,) * self.dim

    def add(self, a, b):
        return tuple(x + y for x, y in zip(_as_vec(a, self.dim),
                                           _as_vec(b, self.dim)))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(_as_vec(a, self.dim),
                                           _as_vec(b, self.dim)))

    def sort_key(self, v):
        return (sum(v), v)

    def format_element(self, v) -> str:
        return ",".join(str(k) for k in v)

    def parse_element(self, text: str):
        return _as_vec(text.strip("() ").split(","), self.dim)


@dataclass(frozen=True)
class FinGenCone:
    """Submonoid of N^dim generated by finitely many nonzero vectors.

    Membership is a memoized search over generator subtractions; fine for
    the desk-scale windows this package works in, and deliberately naive so
    it can serve as an independent oracle for the structured monoids.
    """

    dim: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(sorted({_as_vec(g, self.dim) for g in self.generators}))
        if not gens:
            raise UnsupportedMonoidError("need at least one generator")
        for g in gens:
            if any(k < 0 for k in g) or not any(g):
                raise UnsupportedMonoidError(
                    "generators must be nonzero and nonnegative")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_cache", {})

    def member(self, v) -> bool:
        v = _as_vec(v, self.dim)
        if any(k < 0 for k in v):
            return False
        cache = self._cache
        stack = [v]
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            if not any(u):
                cache[u] = True
                stack.pop()
                continue
            children = [tuple(a - b for a, b in zip(u, g))
                        for g in self.generators
                        if all(a >= b for a, b in zip(u, g))]
            pending = [w for w in children if w not in cache]
            if pending:
                stack.extend(pending)
            else:
                cache[u] = any(cache[w] for w in children)
                stack.pop()
        return cache[v]

    def divides(self, a, b) -> bool:
        return self.member(self.sub(b, a))

    def enumerate_up_to(self, bound) -> list[tuple[int, ...]]:
        box = EvenDegree._box((0,) * self.dim, (bound,) * self.dim)
        out = [v for v in box if sum(v) <= bound and self.member(v)]
        return sorted(out, key=self.sort_key)

    def group_range(self, lo, hi) -> list[tuple[int, ...]]:
        return list(EvenDegree._box(_as_vec(lo, self.dim),
                                    _as_vec(hi, self.dim)))

    def zero(self):
        return (0,) * self.dim

    def add(self, a, b):
        return tuple(x + y for x, y in zip(_as_vec(a, self.dim),
                                           _as_vec(b, self.dim)))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(_as_vec(a, self.dim),
                                           _as_vec(b, self.dim)))

    def sort_key(self, v):
        return (sum(v), v)

    def format_element(self, v) -> str:
        return ",".join(str(k) for k in v)

    def parse_element(self, text: str):
        return _as_vec(text.strip("() ").split(","), self.dim)


# module-level conveniences over the shared protocol

def member(monoid, v) -> bool:
    return monoid.member(v)


def divides(monoid, a, b) -> bool:
    return monoid.divides(a, b)


def conductor(monoid):
    return monoid.conductor()


def enumerate_up_to(monoid, bound, **kw):
    return monoid.enumerate_up_to(bound, **kw)
