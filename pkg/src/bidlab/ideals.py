"""Fractional monomial ideal calculus over a cancellative exponent monoid.

Everything here works at the exponent level: a monomial ideal of the
monoid algebra is the up-set of its exponents, so ideal arithmetic turns
into shift arithmetic.  The two data structures are `MonomialIdeal`, a
finite reduced generator list, and `IdealFilter`, a finite union of "meet
branches".  A meet branch with shifts s_1..s_k holds x exactly when every
x - s_i is a monoid member; that single shape covers intersections of
principal ideals (one branch, shifts = the exponents), inverses of
finitely generated ideals (one branch, negated generators), colon ideals
(one principal branch per generator), and trace ideals (the product of an
ideal with its inverse, one branch per generator).

Exactness is tracked honestly.  Over a numerical semigroup every filter
here is finitely generated, and a window scan up to the threshold
max(shifts) + 2 * conductor provably sees every minimal generator: if v
exceeds the threshold and the conductor c is positive, then w = v - c
stays in the same branch (each w - s_i >= c is a member) and divides v,
while for c = 0 the branch is exactly the principal ideal on its largest
shift.  Over the even-degree monoid the minimal elements have a closed
form per branch (the coordinatewise max of the shifts, or its unit bumps
when that has odd sum).  Root families and generic cones only get window
answers unless a branch contains one of its own shifts, in which case the
branch is exactly a principal ideal and the answer is certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .monoid import (
    EvenDegree,
    FinGenCone,
    MonoidDomainError,
    NumericalSemigroup,
    RootFamily,
)

__all__ = [
    "EngineError",
    "MonoidRingCtx",
    "MonomialIdeal",
    "IdealFilter",
    "NotFgCertificate",
    "FinitenessVerdict",
    "GvResult",
    "XiResult",
    "PRINCIPAL",
    "FG_NON_PRINCIPAL",
    "NOT_FG",
    "INCONCLUSIVE",
    "intersect_principals",
    "colon_filter",
    "ideal_inverse",
    "trace",
    "minimal_generators_up_to",
    "v_closure",
    "t_closure",
    "is_trace_ideal",
    "is_GV",
    "w_closure",
    "xi_closure",
    "classify_finiteness",
    "is_invertible",
    "locally_cyclic_cover",
    "ring_label",
]

PRINCIPAL = "PRINCIPAL"
FG_NON_PRINCIPAL = "FG_NON_PRINCIPAL"
NOT_FG = "NOT_FG"
INCONCLUSIVE = "INCONCLUSIVE"


class EngineError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class MonoidRingCtx:
    """A monoid together with the ring-level reading of its algebra.

    `localized` records whether the ambient ring is taken at the maximal
    monomial ideal.  Monomial divisibility does not depend on it, so the
    engine only reads the flag when a probe's meaning does (t-locality).
    """

    monoid: object
    localized: bool = True

    def member(self, v) -> bool:
        return self.monoid.member(v)

    def divides(self, a, b) -> bool:
        return self.monoid.divides(a, b)

    def zero(self):
        return self.monoid.zero()

    def add(self, a, b):
        return self.monoid.add(a, b)

    def sub(self, a, b):
        return self.monoid.sub(a, b)

    def neg(self, v):
        return self.monoid.sub(self.monoid.zero(), v)

    def sort_key(self, v):
        return self.monoid.sort_key(v)

    def format_element(self, v) -> str:
        return self.monoid.format_element(v)

    def scalar(self) -> bool:
        return not isinstance(self.monoid.zero(), tuple)

    def in_group(self, v) -> bool:
        """Whether v is the exponent of some fraction-field monomial."""
        m = self.monoid
        if isinstance(m, EvenDegree):
            return len(tuple(v)) == m.dim and sum(v) % 2 == 0
        if isinstance(m, (FinGenCone,)):
            return len(tuple(v)) == m.dim
        if isinstance(m, RootFamily):
            q = Fraction(v)
            try:
                m.level_of(q)
            except MonoidDomainError:
                return False
            if not m.include_unit and q.numerator % m.seed:
                return False
            return True
        return Fraction(v).denominator == 1

    def window(self, lo, bound, denominator_cap: int = 1) -> list:
        """Group elements between lo and bound, in canonical order."""
        m = self.monoid
        if isinstance(m, NumericalSemigroup):
            return m.group_range(lo, bound)
        if isinstance(m, RootFamily):
            level = 0
            while m.base ** (level + 1) <= denominator_cap:
                level += 1
            return m.group_range(lo, bound, level)
        hi = (int(bound),) * m.dim
        lo = tuple(lo)
        if any(a > b for a, b in zip(lo, hi)):
            return []
        return sorted(m.group_range(lo, hi), key=m.sort_key)


def _cw_max(ctx: MonoidRingCtx, elems):
    elems = list(elems)
    if ctx.scalar():
        return max(elems)
    return tuple(max(e[i] for e in elems) for i in range(len(elems[0])))


def _cw_min(ctx: MonoidRingCtx, elems):
    elems = list(elems)
    if ctx.scalar():
        return min(elems)
    return tuple(min(e[i] for e in elems) for i in range(len(elems[0])))


def _reduce_minimal(ctx: MonoidRingCtx, elems) -> list:
    """Divisibility-minimal elements; input need not be sorted.

    The sort key refines divisibility (a proper divisor is strictly
    smaller), so one ascending greedy pass is enough.
    """
    out: list = []
    for x in sorted(set(elems), key=ctx.sort_key):
        if not any(ctx.divides(m, x) for m in out):
            out.append(x)
    return out


def _fmt_elems(ctx: MonoidRingCtx, elems) -> str:
    return ", ".join(ctx.format_element(e) for e in elems)


@dataclass(frozen=True)
class MonomialIdeal:
    """Finitely generated fractional monomial ideal, reduced generators."""

    ctx: MonoidRingCtx
    generators: tuple

    @classmethod
    def make(cls, ctx: MonoidRingCtx, generators) -> "MonomialIdeal":
        gens = list(generators)
        for g in gens:
            if not ctx.in_group(g):
                raise MonoidDomainError(
                    f"{ctx.format_element(g)} is not a group exponent of "
                    f"{ring_label(ctx)}")
        return cls(ctx, tuple(_reduce_minimal(ctx, gens)))

    def member(self, x) -> bool:
        return any(self.ctx.divides(g, x) for g in self.generators)

    def is_principal(self) -> bool:
        return len(self.generators) == 1

    def is_integral(self) -> bool:
        return all(self.ctx.member(g) for g in self.generators)

    def translated(self, delta) -> "MonomialIdeal":
        moved = [self.ctx.add(g, delta) for g in self.generators]
        return MonomialIdeal(self.ctx, tuple(moved))

    def label(self) -> str:
        return f"({_fmt_elems(self.ctx, self.generators)})"


@dataclass(frozen=True)
class IdealFilter:
    """Union of meet branches; see the module docstring for semantics.

    `provenance` is a human-readable construction trail built from the
    vocabulary INTERSECTION / INVERSE / COLON / PRODUCT / SHIFT, carried
    along so windowed answers can always say what they are answers about.
    """

    ctx: MonoidRingCtx
    branches: tuple
    provenance: str

    def member(self, x) -> bool:
        ctx = self.ctx
        return any(all(ctx.member(ctx.sub(x, s)) for s in br)
                   for br in self.branches)

    def low(self):
        """No member is strictly below this (coordinatewise) bound."""
        return _cw_min(self.ctx, [_cw_max(self.ctx, br)
                                  for br in self.branches])

    def translated(self, delta) -> "IdealFilter":
        ctx = self.ctx
        brs = tuple(tuple(ctx.add(s, delta) for s in br)
                    for br in self.branches)
        tag = f"SHIFT({ctx.format_element(delta)}, {self.provenance})"
        return IdealFilter(ctx, brs, tag)


def _mk_filter(ctx: MonoidRingCtx, branches, provenance: str) -> IdealFilter:
    """Canonicalize branches: drop dominated shifts, sort, dedupe."""
    canon = []
    for br in branches:
        shifts = sorted(set(br), key=ctx.sort_key)
        if not shifts:
            raise MonoidDomainError("a meet branch needs at least one shift")
        # if s' = s + m with m a member, the s-condition is implied by s'
        kept = [s for s in shifts
                if not any(t != s and ctx.divides(s, t) for t in shifts)]
        canon.append(tuple(kept))
    canon = sorted(set(canon), key=lambda br: [ctx.sort_key(s) for s in br])
    return IdealFilter(ctx, tuple(canon), provenance)


# -- constructors --------------------------------------------------------------

def intersect_principals(ctx: MonoidRingCtx, exponents) -> IdealFilter:
    """The filter of the intersection of the principal ideals (e_i).

    Exponents may be fractional and may be comparable; a dominated
    exponent just makes its condition redundant.
    """
    exps = tuple(exponents)
    if not exps:
        raise MonoidDomainError("need at least one exponent")
    for e in exps:
        if not ctx.in_group(e):
            raise MonoidDomainError(
                f"{ctx.format_element(e)} is not a group exponent")
    return _mk_filter(ctx, (exps,), f"INTERSECTION({_fmt_elems(ctx, exps)})")


def ideal_inverse(ideal: MonomialIdeal) -> IdealFilter:
    """The inverse ideal (D : I) = {x : x + g is a member for every g}."""
    if not ideal.generators:
        raise MonoidDomainError("the zero ideal has no inverse")
    ctx = ideal.ctx
    branch = tuple(ctx.neg(g) for g in ideal.generators)
    return _mk_filter(ctx, (branch,), f"INVERSE({ideal.label()})")


def colon_filter(ideal: MonomialIdeal, x, in_ring: bool = True) -> IdealFilter:
    """(I : x), intersected with the ring when `in_ring` is set.

    z + x lands in I exactly when some generator divides it, so the colon
    is the union over generators g of the principal branch on g - x; the
    ring restriction adds the zero shift to every branch.
    """
    ctx = ideal.ctx
    if not ideal.generators:
        raise MonoidDomainError("colon by the zero ideal's filter is empty")
    extra = (ctx.zero(),) if in_ring else ()
    branches = tuple((ctx.sub(g, x),) + extra for g in ideal.generators)
    tag = f"COLON({ideal.label()}, {ctx.format_element(x)})"
    if in_ring:
        tag += " & RING"
    return _mk_filter(ctx, branches, tag)


def trace(ideal: MonomialIdeal) -> IdealFilter:
    """The trace ideal I * (D : I) as a filter.

    x = g + v with v in the inverse means x - g satisfies every inverse
    condition, so branch g carries the shifts g - h over all generators h.
    """
    ctx = ideal.ctx
    if not ideal.generators:
        raise MonoidDomainError("the zero ideal has no trace")
    gens = ideal.generators
    branches = tuple(tuple(ctx.sub(g, h) for h in gens) for g in gens)
    return _mk_filter(
        ctx, branches, f"PRODUCT({ideal.label()}, INVERSE({ideal.label()}))")


# -- materialization ------------------------------------------------------------

def _ns_threshold(f: IdealFilter) -> int:
    c = f.ctx.monoid.conductor()
    return max(max(br) + 2 * c for br in f.branches)


def _even_unit(dim: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(dim))


def _even_exact_mingens(f: IdealFilter) -> list:
    """Closed-form minimal elements over the even-degree monoid.

    A branch holds x iff x >= nu coordinatewise (nu the max of its shifts)
    and sum(x) is even; shifts are group elements, so sum(x - s) and
    sum(x) share parity.  Even nu is the unique minimum; odd nu has the
    unit bumps nu + e_i as its minimal antichain.
    """
    ctx = f.ctx
    dim = ctx.monoid.dim
    out = []
    for br in f.branches:
        nu = _cw_max(ctx, br)
        if sum(nu) % 2 == 0:
            out.append(nu)
        else:
            out.extend(tuple(a + b for a, b in zip(nu, _even_unit(dim, i)))
                       for i in range(dim))
    return _reduce_minimal(ctx, out)


def _principal_branch_gens(f: IdealFilter) -> list | None:
    """Exact generators when every branch contains one of its own shifts.

    If shift s satisfies every condition of its branch, the branch equals
    the principal ideal (s): membership forces x - s in the monoid, and
    s plus any member stays in the branch.  Works over any monoid.
    """
    ctx = f.ctx
    gens = []
    for br in f.branches:
        s = next((s for s in br
                  if all(ctx.member(ctx.sub(s, t)) for t in br)), None)
        if s is None:
            return None
        gens.append(s)
    return _reduce_minimal(ctx, gens)


def minimal_generators_up_to(f: IdealFilter, bound,
                             denominator_cap: int = 1) -> tuple:
    """(window-minimal members, completeness proved) for the filter.

    The window runs from the filter's lower bound to `bound` (denominator
    capped for root families).  Divisors never leave the window, so the
    returned list is exactly the set of true minimal generators that fit;
    `complete` reports whether a proof covers the rest of the filter.
    """
    ctx = f.ctx
    cands = ctx.window(f.low(), bound, denominator_cap)
    gens = tuple(_reduce_minimal(ctx, [x for x in cands if f.member(x)]))
    return gens, _completeness_proved(f, bound, gens)


def _completeness_proved(f: IdealFilter, bound, gens) -> bool:
    m = f.ctx.monoid
    if isinstance(m, NumericalSemigroup):
        return Fraction(bound) >= _ns_threshold(f)
    if isinstance(m, EvenDegree):
        exact = _even_exact_mingens(f)
        if not all(all(c <= bound for c in g) for g in exact):
            return False
        if set(gens) != set(exact):
            raise EngineError("window scan disagrees with the closed form")
        return True
    exact = _principal_branch_gens(f)
    return exact is not None and set(gens) == set(exact)


def _materialize(f: IdealFilter, bound, denominator_cap: int = 1) -> tuple:
    """Best-effort (MonomialIdeal, complete) for internal closure work.

    Numerical semigroups auto-extend the window to the proven threshold
    and the even monoid uses its closed form, so both come back exact;
    other monoids return the windowed under-approximation, flagged.
    """
    ctx = f.ctx
    m = ctx.monoid
    if isinstance(m, NumericalSemigroup):
        b = max(Fraction(bound), _ns_threshold(f))
        gens, complete = minimal_generators_up_to(f, b, 1)
    elif isinstance(m, EvenDegree):
        gens, complete = tuple(_even_exact_mingens(f)), True
    else:
        gens, complete = minimal_generators_up_to(f, bound, denominator_cap)
    return MonomialIdeal(ctx, gens), complete


# -- divisorial machinery -------------------------------------------------------

def v_closure(ideal: MonomialIdeal, bound=None,
              denominator_cap: int = 1) -> IdealFilter:
    """The divisorial closure (I^-1)^-1 as a filter.

    The inner inverse is materialized first (exactly over numerical
    semigroups and the even monoid; windowed otherwise, which needs an
    explicit bound).  Equals the t-closure on finitely generated input.
    """
    ctx = ideal.ctx
    inv = ideal_inverse(ideal)
    if bound is None:
        if not isinstance(ctx.monoid, (NumericalSemigroup, EvenDegree)):
            raise MonoidDomainError(
                "v_closure needs an explicit bound over this monoid")
        bound = 0
    inner, _ = _materialize(inv, bound, denominator_cap)
    if not inner.generators:
        raise EngineError("inverse filter materialized empty")
    branch = tuple(ctx.neg(h) for h in inner.generators)
    return _mk_filter(ctx, (branch,), f"INVERSE(INVERSE({ideal.label()}))")


def t_closure(ideal: MonomialIdeal, bound=None,
              denominator_cap: int = 1) -> IdealFilter:
    """t-closure; on finitely generated ideals it coincides with v."""
    return v_closure(ideal, bound, denominator_cap)


def is_trace_ideal(ideal: MonomialIdeal, bound,
                   denominator_cap: int = 1) -> bool:
    """Whether I equals its own trace on the window.

    The trace always contains I (zero sits in the inverse of an integral
    ideal, and fractional translates cancel), so only the reverse
    containment is scanned.  Exact over numerical semigroups (the window
    is extended to the trace threshold) and the even monoid (closed-form
    trace generators); a window verdict elsewhere.
    """
    ctx = ideal.ctx
    tr = trace(ideal)
    if isinstance(ctx.monoid, EvenDegree):
        return all(ideal.member(g) for g in _even_exact_mingens(tr))
    if isinstance(ctx.monoid, NumericalSemigroup):
        bound = max(Fraction(bound), _ns_threshold(tr))
    for x in ctx.window(tr.low(), bound, denominator_cap):
        if tr.member(x) and not ideal.member(x):
            return False
    return True


@dataclass(frozen=True)
class GvResult:
    """Outcome of a Glaz-Vasconcelos test.

    A False verdict always carries a witness (an inverse element outside
    the ring) and is definitive; a True verdict is definitive only when
    `complete` is set.
    """

    verdict: bool
    witness: object
    complete: bool


def is_GV(ideal: MonomialIdeal, bound, denominator_cap: int = 1) -> GvResult:
    """Whether the inverse of the integral ideal I collapses to the ring.

    Scans the inverse window in canonical order and reports the first
    element outside the monoid as witness.  Over a numerical semigroup the
    scan reaches the threshold, so a clean scan proves the inverse's
    minimal generators are all members and the verdict is exact; the even
    monoid gets the same guarantee through its closed form.
    """
    ctx = ideal.ctx
    if not ideal.generators:
        raise MonoidDomainError("the zero ideal is not a GV candidate")
    if not ideal.is_integral():
        raise MonoidDomainError("GV is asked of integral ideals only")
    inv = ideal_inverse(ideal)
    complete = False
    if isinstance(ctx.monoid, NumericalSemigroup):
        bound = max(Fraction(bound), _ns_threshold(inv))
        complete = True
    elif isinstance(ctx.monoid, EvenDegree):
        exact = _even_exact_mingens(inv)
        bad = [g for g in exact if not ctx.member(g)]
        if bad:
            return GvResult(False, bad[0], True)
        return GvResult(True, None, True)
    for x in ctx.window(inv.low(), bound, denominator_cap):
        if inv.member(x) and not ctx.member(x):
            return GvResult(False, x, True)
    return GvResult(True, None, complete)


def w_closure(ideal: MonomialIdeal, x, bound,
              denominator_cap: int = 1) -> bool:
    """Whether x lies in the w-closure of I on the window.

    x is w-inside iff some finitely generated GV ideal J has x + J inside
    I, i.e. J sits inside C = (I : x) & D.  GV ideals are upward closed
    among finitely generated ideals (a bigger ideal has a smaller
    inverse), so the single test on the materialized C decides.
    """
    if ideal.member(x):
        return True
    c_ideal, _ = _materialize(colon_filter(ideal, x), bound, denominator_cap)
    if not c_ideal.generators:
        return False
    return is_GV(c_ideal, bound, denominator_cap).verdict


@dataclass(frozen=True)
class XiResult:
    """Outcome of a xi-closure membership test; positive carries the
    finitely generated trace ideal that certifies it."""

    positive: bool
    witness: MonomialIdeal | None


def xi_closure(ideal: MonomialIdeal, x, bound,
               denominator_cap: int = 1) -> XiResult:
    """Whether x J lands in I for some finitely generated trace ideal J.

    Candidates are drawn from C = (I : x) & D, the largest set any
    witness can occupy: C itself when it is a trace ideal, then the
    traces of the subideals spanned by C's minimal generators, filtered
    back into C.  Every certificate returned is verified; a negative is a
    window answer (the candidate family is sound but not known to be
    exhaustive outside the integrally closed cases).
    """
    ctx = ideal.ctx
    if ideal.member(x):
        return XiResult(True, MonomialIdeal.make(ctx, (ctx.zero(),)))
    c_ideal, _ = _materialize(colon_filter(ideal, x), bound, denominator_cap)
    gens = c_ideal.generators
    if not gens:
        return XiResult(False, None)
    if is_trace_ideal(c_ideal, bound, denominator_cap):
        return XiResult(True, c_ideal)
    for size in range(1, len(gens) + 1):
        for sub in combinations(gens, size):
            cand, _ = _materialize(trace(MonomialIdeal(ctx, sub)),
                                   bound, denominator_cap)
            if cand.generators and all(c_ideal.member(g)
                                       for g in cand.generators):
                return XiResult(True, cand)
    return XiResult(False, None)


# -- finiteness -----------------------------------------------------------------

@dataclass(frozen=True)
class NotFgCertificate:
    """A parametric family of minimal generators plus verified instances."""

    family: str
    instances: tuple


@dataclass(frozen=True)
class FinitenessVerdict:
    """Classification of a filter: PRINCIPAL / FG_NON_PRINCIPAL carry the
    proven generators, NOT_FG carries a certificate, INCONCLUSIVE carries
    the window generators and the window that produced them."""

    kind: str
    generators: tuple = ()
    certificate: NotFgCertificate | None = None
    bound: object = None

    def describe(self, ctx: MonoidRingCtx) -> str:
        if self.kind == NOT_FG:
            inst = _fmt_elems(ctx, self.certificate.instances)
            return f"NOT_FG[{self.certificate.family}; e.g. {inst}]"
        body = _fmt_elems(ctx, self.generators)
        if self.kind == INCONCLUSIVE:
            return f"INCONCLUSIVE[window gens {body} at {self.bound}]"
        return f"{self.kind}[{body}]"


def _verified_certificate(f: IdealFilter, family: str,
                          instances) -> NotFgCertificate:
    ctx = f.ctx
    inst = tuple(instances)
    for a in inst:
        if not f.member(a):
            raise EngineError("certificate instance escapes the filter")
    for a, b in combinations(inst, 2):
        if ctx.divides(a, b) or ctx.divides(b, a):
            raise EngineError("certificate instances are redundant")
    return NotFgCertificate(family, inst)


def classify_finiteness(f: IdealFilter, bound,
                        denominator_cap: int = 1) -> FinitenessVerdict:
    """Classify the filter's generation type, never overclaiming.

    PRINCIPAL and FG_NON_PRINCIPAL are only issued with a completeness
    proof.  The NOT_FG branch is the even monoid's countable-variable
    reading: a one-branch filter whose coordinatewise shift max has odd
    degree needs a unit bump into every fresh coordinate, so its minimal
    generators grow without bound; instances are verified inside the
    working dimension.  Root-family windows that fail the principal
    shortcut stay INCONCLUSIVE: their honest window generators are
    reported, never promoted.
    """
    ctx = f.ctx
    m = ctx.monoid
    if isinstance(m, EvenDegree) and len(f.branches) == 1:
        nu = _cw_max(ctx, f.branches[0])
        if sum(nu) % 2 == 0:
            return FinitenessVerdict(PRINCIPAL, (nu,))
        dim = m.dim
        bumps = [tuple(a + b for a, b in zip(nu, _even_unit(dim, i)))
                 for i in range(min(dim, 3))]
        cert = _verified_certificate(
            f, f"({_fmt_elems(ctx, [nu])}) + e(n), n fresh", bumps)
        return FinitenessVerdict(NOT_FG, certificate=cert)
    gens, complete = minimal_generators_up_to(f, bound, denominator_cap)
    if complete and not isinstance(m, EvenDegree):
        if not gens:
            raise EngineError("complete filter with no generators")
        kind = PRINCIPAL if len(gens) == 1 else FG_NON_PRINCIPAL
        return FinitenessVerdict(kind, gens)
    return FinitenessVerdict(INCONCLUSIVE, gens,
                             bound=(bound, denominator_cap))


def is_invertible(ideal: MonomialIdeal, bound=None) -> bool:
    """Whether I * I^-1 is the whole ring.

    The trace is an integral ideal here, so invertibility is exactly
    membership of zero in the trace filter; no window is needed and the
    answer is exact over every monoid.  `bound` is accepted for signature
    uniformity and ignored.
    """
    del bound
    return trace(ideal).member(ideal.ctx.zero())


def locally_cyclic_cover(ctx: MonoidRingCtx, gens, search_bound,
                         denominator_cap: int = 1):
    """Smallest nonzero monomial y with every generator in (y), or None.

    This is the finite check behind local cyclicity: the given monomials
    all lie in a common principal ideal iff some nonzero member divides
    each of them.  Scans members in canonical order up to the bound.
    """
    ideal = MonomialIdeal.make(ctx, gens)
    if not ideal.generators:
        raise MonoidDomainError("need at least one generator")
    zero = ctx.zero()
    for y in ctx.window(zero, search_bound, denominator_cap):
        if y == zero or not ctx.member(y):
            continue
        if all(ctx.divides(y, g) for g in ideal.generators):
            return y
    return None


def ring_label(ctx: MonoidRingCtx) -> str:
    m = ctx.monoid
    if isinstance(m, NumericalSemigroup):
        core = f"numerical_semigroup[{','.join(map(str, m.generators))}]"
    elif isinstance(m, RootFamily):
        unit = "" if m.include_unit else ",no_unit"
        core = f"root_family[base={m.base},seed={m.seed}{unit}]"
    elif isinstance(m, EvenDegree):
        core = f"even_degree[dim={m.dim}]"
    elif isinstance(m, FinGenCone):
        gens = ";".join(",".join(map(str, g)) for g in m.generators)
        core = f"fin_gen_cone[dim={m.dim};{gens}]"
    else:
        core = type(m).__name__
    return core + ("@localized" if ctx.localized else "@global")
