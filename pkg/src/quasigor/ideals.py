"""Ideal algebra on top of the Groebner engine.

Intersections adjoin one fresh weight-1 variable (appended, never
prepended, and named with a ``t#`` prefix the parser cannot produce) under
a block order that makes it dominant: the t-free part of the reduced basis
of t*I + (1-t)*J is the reduced basis of the intersection.  Colon ideals
split over the generators of the divisor ideal, each handled through
I : g = (1/g)(I and (g)).  Dimension is the combinatorial dimension of the
initial ideal: the largest set of variables meeting no leading-monomial
support, found by exhaustive subset search (exponential in the variable
count; fine at the <= 16 variables this package targets).
"""

from __future__ import annotations

from itertools import combinations

from .errors import InputError, RingMismatchError, UnsupportedRequestError
from .groebner import GroebnerBasis, buchberger
from .orders import elimination_order, GrevlexOrder, LexOrder
from .rings import Polynomial, PolyRing, monomial_div, monomial_divides, monomial_mul


def _extended_base_order(order, extra: int):
    if isinstance(order, GrevlexOrder):
        return GrevlexOrder(order.weights + (1,) * extra)
    if isinstance(order, LexOrder):
        return LexOrder(order.nvars + extra)
    raise UnsupportedRequestError("elimination over block-ordered rings is not supported")


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g for f a known multiple of g; raises if the division leaves a
    remainder."""
    if not g:
        raise InputError("division by the zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError("operands belong to different rings")
    field = f.ring.field
    key = f.ring.order.key
    g_lm, g_lc = g.terms[0]
    g_tail = g.terms[1:]
    p = dict(f.terms)
    quotient = {}
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        if not monomial_divides(g_lm, m):
            raise InputError("polynomial is not an exact multiple")
        qm = monomial_div(m, g_lm)
        qc = field.div(c, g_lc)
        quotient[qm] = qc
        for mg, cg in g_tail:
            mm = monomial_mul(mg, qm)
            delta = field.mul(qc, cg)
            prev = p.get(mm)
            if prev is None:
                p[mm] = field.neg(delta)
            else:
                s = field.sub(prev, delta)
                if s:
                    p[mm] = s
                else:
                    del p[mm]
    return f.ring.polynomial(quotient)


class Ideal:
    """An ideal given by generators, with a lazily cached reduced Groebner
    basis per monomial order.

    The cache fill is idempotent (immutable values, at-most-once semantics
    per key under the GIL), so Ideal values may be shared across threads.
    """

    def __init__(self, ring: PolyRing, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, Polynomial):
                if g.ring != ring:
                    raise RingMismatchError("generator from a different ring")
                gens.append(g)
            elif isinstance(g, str):
                gens.append(ring.parse(g))
            elif isinstance(g, int):
                gens.append(ring.constant(ring.field.scalar(g)))
            else:
                raise InputError(f"cannot use {g!r} as an ideal generator")
        self.generators = tuple(gens)
        self._gb_cache: dict = {}

    # -- basics -------------------------------------------------------------

    def is_zero_ideal(self) -> bool:
        return all(not g for g in self.generators)

    def groebner_basis(self, order=None) -> GroebnerBasis:
        key = self.ring.order if order is None else order
        cached = self._gb_cache.get(key)
        if cached is None:
            if self.is_zero_ideal():
                cached = GroebnerBasis(self.ring, key, ())
            else:
                cached = buchberger(self.generators, order=key)
            self._gb_cache[key] = cached
        return cached

    def _seed_basis(self, gb: GroebnerBasis):
        self._gb_cache.setdefault(gb.order, gb)

    def contains(self, f: Polynomial) -> bool:
        gb = self.groebner_basis()
        if not gb.polys:
            return not f
        return gb.contains(f)

    def is_proper(self) -> bool:
        return not self.groebner_basis().is_unit()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner_basis().polys == other.groebner_basis().polys

    def __hash__(self):
        return hash((self.ring, self.groebner_basis().polys))

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators[:6])
        if len(self.generators) > 6:
            inside += ", ..."
        return f"Ideal({inside})"

    def _require_same_ring(self, other: "Ideal"):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise RingMismatchError("ideals belong to different rings")

    # -- sums and products ----------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self._require_same_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._require_same_ring(other)
        gens = [
            f * g
            for f in self.generators
            if f
            for g in other.generators
            if g
        ]
        return Ideal(self.ring, gens)

    # -- intersection via elimination ----------------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        self._require_same_ring(other)
        ring = self.ring
        if self.is_zero_ideal() or other.is_zero_ideal():
            return Ideal(ring, [])
        ext = ring.extended(1)
        base = _extended_base_order(ring.order, 1)
        order = elimination_order(ext.nvars, [ext.nvars - 1], base)
        t = ext.variable(ext.names[-1])
        one = ext.one()

        def embed(f: Polynomial) -> Polynomial:
            return ext.polynomial({m + (0,): c for m, c in f.terms})

        gens = [t * embed(f) for f in self.generators if f]
        gens += [(one - t) * embed(g) for g in other.generators if g]
        gb = buchberger(gens, order=order)
        kept = []
        for p in gb:
            if all(m[-1] == 0 for m, _ in p.terms):
                kept.append(ring.polynomial({m[:-1]: c for m, c in p.terms}))
        result = Ideal(ring, kept)
        result._seed_basis(GroebnerBasis(ring, ring.order, kept))
        return result

    # -- colon ideals ----------------------------------------------------------

    def colon(self, other: "Ideal") -> "Ideal":
        """I : J = { f : f*J inside I }, as the intersection over the
        generators g of J of (1/g)(I and (g))."""
        self._require_same_ring(other)
        ring = self.ring
        if other.is_zero_ideal():
            raise InputError("colon by the zero ideal")
        gb_self = self.groebner_basis()
        factors = []
        seen = set()
        for g in other.generators:
            if not g:
                continue
            monic = g.monic()
            if monic.terms in seen:
                continue
            seen.add(monic.terms)
            if gb_self.polys and gb_self.contains(g):
                continue  # g already in I, so I : g is the unit ideal
            if not gb_self.polys:
                factors.append(Ideal(ring, []))
                continue
            meet = self.intersect(Ideal(ring, [g]))
            factors.append(Ideal(ring, [exact_quotient(f, g) for f in meet.generators]))
        if not factors:
            return Ideal(ring, [ring.one()])
        result = factors[0]
        for factor in factors[1:]:
            result = result.intersect(factor)
        return result

    # -- elimination --------------------------------------------------------------

    def eliminate(self, variables) -> "Ideal":
        """Generators of I meeting only the remaining variables; equals the
        contraction of I to the subring they span."""
        ring = self.ring
        positions = []
        for v in variables:
            name = v if isinstance(v, str) else _variable_name(v)
            if name not in ring._index:
                raise InputError(f"unknown variable '{name}'")
            positions.append(ring._index[name])
        positions = sorted(set(positions))
        if not positions:
            return self
        if self.is_zero_ideal():
            return Ideal(ring, [])
        order = elimination_order(ring.nvars, positions, ring.order)
        gb = buchberger(self.generators, order=order)
        kept = []
        for p in gb:
            if all(all(m[i] == 0 for i in positions) for m, _ in p.terms):
                kept.append(ring.polynomial(dict(p.terms)))
        return Ideal(ring, kept)

    # -- dimension theory ------------------------------------------------------------

    def dimension(self) -> int:
        """Krull dimension of ring/I (combinatorial dimension of the initial
        ideal): the largest variable subset containing no leading-monomial
        support."""
        gb = self.groebner_basis()
        if gb.is_unit():
            raise InputError("the unit ideal has no dimension")
        n = self.ring.nvars
        supports = []
        for lm in gb.leading_monomials():
            mask = 0
            for i, e in enumerate(lm):
                if e:
                    mask |= 1 << i
            supports.append(mask)
        if not supports:
            return n
        for size in range(n, -1, -1):
            for combo in combinations(range(n), size):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if all(s & ~mask for s in supports):
                    return size
        raise AssertionError("unreachable: the empty set is always independent")

    def codimension(self) -> int:
        return self.ring.nvars - self.dimension()

    # -- Hilbert function -----------------------------------------------------------

    def hilbert_function(self, n: int) -> int:
        """dim_k (ring/I)_n for the weighted grading: the number of degree-n
        standard monomials.  Requires strictly positive weights and
        weight-homogeneous generators."""
        ring = self.ring
        if any(w == 0 for w in ring.weights):
            raise UnsupportedRequestError(
                "Hilbert functions are not defined here for rings with "
                "weight-0 variables (graded pieces would be infinite-dimensional)"
            )
        if n < 0:
            return 0
        for g in self.generators:
            if not g.is_homogeneous():
                raise InputError("Hilbert function requires homogeneous generators")
        lms = self.groebner_basis().leading_monomials()
        count = 0
        for m in _monomials_of_degree(ring.weights, n):
            if not any(monomial_divides(lm, m) for lm in lms):
                count += 1
        return count

    # -- regularity ---------------------------------------------------------------------

    def is_regular_element(self, f: Polynomial) -> bool:
        """True iff I : f = I, i.e. f is a non-zerodivisor on ring/I."""
        if not f:
            raise InputError("the zero polynomial is never a regular element")
        if not self.is_proper():
            raise InputError("regularity is tested modulo a proper ideal")
        return self.colon(Ideal(self.ring, [f])) == self


def _variable_name(v) -> str:
    if isinstance(v, Polynomial) and len(v.terms) == 1:
        m, c = v.terms[0]
        if c == v.ring.field.one and sum(m) == 1:
            return v.ring.names[m.index(1)]
    raise InputError(f"{v!r} is not a variable")


def _monomials_of_degree(weights, n: int):
    """All exponent tuples of weighted degree exactly n, in a fixed order."""
    out = []
    k = len(weights)

    def rec(i, remaining, prefix):
        if i == k - 1:
            w = weights[i]
            if remaining % w == 0:
                out.append(tuple(prefix + [remaining // w]))
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            rec(i + 1, remaining - w * e, prefix + [e])

    rec(0, n, [])
    return out
