"""Q-divisors on the projective line and Segre cohomology tables.

Points of P^1 = Proj k[w,z] are the primes (w + i*z) for integer scalars
i, written P(i), plus the point at infinity (z), written inf.  A divisor
is a finite formal sum with exact rational coefficients.  For an integral
divisor E of degree d on P^1, h0 = max(0, d+1) and h1 = max(0, -d-1)
(Riemann-Roch with genus 0; Serre duality pairs E with -E-2*point).

Section spaces of O(floor(n*D)) are realized explicitly as numerator
forms over the denominator prod ell_j^{c_j} built from the positive floor
coefficients; products of sections then live over a common denominator,
so generator and relation degrees of the section ring come out of exact
linear algebra on numerator coefficients.

A second, fixed cohomology table covers the degree-3 polarization of an
elliptic curve (h0 = 1, 3n for n = 0, n >= 1; h1(n) = h0(-n)); this is a
documented lookup, not a curve-cohomology engine, and the dimensions it
lists are characteristic-independent only away from characteristic 3.
Kuenneth turns a pair of tables into graded local-cohomology dimensions
of the Segre product of the two section rings.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InputError, ParseError, UnsupportedRequestError
from .fields import QQ
from .parse import Token, _TokenStream, tokenize
from .rings import Polynomial, PolyRing

#: Homogeneous coordinate ring of P^1 used for section numerators.
P1_RING = PolyRing(("w", "z"), QQ)


@dataclass(frozen=True, order=True)
class CurvePoint:
    """A closed point of P^1: P(i) is the prime (w + i*z), inf is (z)."""

    at_infinity: bool
    scalar: int = 0

    @staticmethod
    def finite(i: int) -> "CurvePoint":
        return CurvePoint(False, int(i))

    @staticmethod
    def infinity() -> "CurvePoint":
        return CurvePoint(True, 0)

    @property
    def label(self) -> str:
        return "inf" if self.at_infinity else f"P({self.scalar})"

    def prime_form(self, ring: PolyRing = P1_RING) -> Polynomial:
        w, z = ring.gens()
        if self.at_infinity:
            return z
        return w + z.scaled(ring.field.scalar(self.scalar))

    def __repr__(self):
        return self.label


class QDivisor:
    """Finite formal sum of curve points with exact rational coefficients.

    Zero coefficients are pruned at construction, so support and degree
    are always meaningful; instances are immutable.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        clean = {}
        for point, coeff in coefficients.items() if isinstance(coefficients, dict) else coefficients:
            coeff = Fraction(coeff)
            if coeff:
                acc = clean.get(point, Fraction(0)) + coeff
                if acc:
                    clean[point] = acc
                else:
                    clean.pop(point, None)
        self.coefficients = dict(sorted(clean.items()))

    def degree(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    @property
    def support(self):
        return tuple(self.coefficients)

    def coefficient(self, point: CurvePoint) -> Fraction:
        return self.coefficients.get(point, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients.values())

    def floor_multiple(self, n: int) -> "QDivisor":
        """Coefficient-wise floor of n*D (an integral divisor)."""
        return QDivisor({p: Fraction(_floor(n * c)) for p, c in self.coefficients.items()})

    def __add__(self, other: "QDivisor") -> "QDivisor":
        acc = dict(self.coefficients)
        for p, c in other.coefficients.items():
            acc[p] = acc.get(p, Fraction(0)) + c
        return QDivisor(acc)

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "QDivisor":
        factor = Fraction(factor)
        return QDivisor({p: c * factor for p, c in self.coefficients.items()})

    def __eq__(self, other):
        return isinstance(other, QDivisor) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for i, (p, c) in enumerate(self.coefficients.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = p.label if mag == 1 else f"{mag}*{p.label}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"QDivisor({self})"


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def h0(divisor: QDivisor) -> int:
    """Global sections of an integral divisor on P^1: max(0, deg+1)."""
    if not divisor.is_integral():
        raise InputError("h0 needs an integral divisor; take floor_multiple first")
    return max(0, int(divisor.degree()) + 1)


def h1(divisor: QDivisor) -> int:
    """First cohomology on P^1: max(0, -deg-1) (Serre dual to h0)."""
    if not divisor.is_integral():
        raise InputError("h1 needs an integral divisor; take floor_multiple first")
    return max(0, -int(divisor.degree()) - 1)


# ---------------------------------------------------------------------------
# explicit section spaces


@dataclass(frozen=True)
class SectionSpace:
    """Basis of H0(P^1, O(floor(n*D))) as numerator/denominator pairs."""

    level: int
    floor_divisor: QDivisor
    denominator: Polynomial
    numerators: tuple

    def sections(self):
        return tuple((num, self.denominator) for num in self.numerators)

    def __len__(self):
        return len(self.numerators)


def _denominator(floor_div: QDivisor, ring: PolyRing) -> Polynomial:
    den = ring.one()
    for p, c in floor_div.coefficients.items():
        if c > 0:
            den = den * p.prime_form(ring) ** int(c)
    return den


def _forced_factor(floor_div: QDivisor, ring: PolyRing) -> Polynomial:
    forced = ring.one()
    for p, c in floor_div.coefficients.items():
        if c < 0:
            forced = forced * p.prime_form(ring) ** int(-c)
    return forced


def section_basis(divisor: QDivisor, n: int, ring: PolyRing = P1_RING) -> SectionSpace:
    """Explicit basis of the level-n piece of the section ring of D.

    Numerators are the forced vanishing factor (primes with negative floor
    coefficient) times the monomials of degree deg(floor(n*D)); the
    denominator collects the positive floor coefficients.  The basis size
    equals h0 of the floored divisor.
    """
    if n < 0:
        raise InputError("section spaces are indexed by n >= 0")
    floored = divisor.floor_multiple(n)
    den = _denominator(floored, ring)
    deg = int(floored.degree())
    if deg < 0:
        return SectionSpace(n, floored, den, ())
    forced = _forced_factor(floored, ring)
    w, z = ring.gens()
    numerators = tuple(forced * w ** (deg - i) * z**i for i in range(deg + 1))
    return SectionSpace(n, floored, den, numerators)


def _form_coefficients(f: Polynomial, degree: int, field):
    """Coefficient vector of a form of the given degree in k[w,z]
    (coordinates ordered w^degree, w^(degree-1) z, ..., z^degree)."""
    row = [field.zero] * (degree + 1)
    for (ew, ez), c in f.terms:
        if ew + ez != degree:
            raise InputError("not homogeneous of the expected degree")
        row[ez] = c
    return row


def _positive_floor(divisor: QDivisor, n: int):
    return {p: max(int(c), 0) for p, c in divisor.floor_multiple(n).coefficients.items()}


def generator_degrees(divisor: QDivisor, degree_bound: int, ring: PolyRing = P1_RING):
    """Scan levels 1..degree_bound for new algebra generators of the section
    ring and for minimal relations among them.

    Returns (generator degree multiset, relation degree multiset) as sorted
    tuples.  New generators at level n are the sections not spanned by
    products of earlier generators; relation counts subtract the lifts of
    relations already found, all by exact rank computations.
    """
    if degree_bound < 1:
        raise InputError("degree bound must be at least 1")
    field = ring.field
    generators = []  # (degree, numerator form, positive floor exponents)
    relations = []  # (degree, coefficient vector, exponent list at that degree)
    found_any = False

    for n in range(1, degree_bound + 1):
        space = section_basis(divisor, n, ring)
        target = _positive_floor(divisor, n)
        ambient_deg = sum(target.values())
        dim = len(space)
        exponents = _generator_monomials(generators, n)
        rows = []
        for e in exponents:
            rows.append(
                _form_coefficients(_product_numerator(generators, e, target, ring), ambient_deg, field)
            )
        product_rank = linalg.rank(rows, field) if rows else 0

        if dim:
            found_any = True
        new_count = dim - product_rank
        if new_count > 0:
            span = list(rows)
            current_rank = product_rank
            for num in space.numerators:
                candidate = _form_coefficients(num, ambient_deg, field)
                if linalg.rank(span + [candidate], field) > current_rank:
                    span.append(candidate)
                    current_rank += 1
                    generators.append((n, num, dict(target)))
            # products plus the new generators now span the whole level
            exponents = _generator_monomials(generators, n)
            rows = [
                _form_coefficients(_product_numerator(generators, e, target, ring), ambient_deg, field)
                for e in exponents
            ]

        if exponents:
            kernel_dim = len(exponents) - linalg.rank(rows, field)
            if kernel_dim > 0:
                index = {e: i for i, e in enumerate(exponents)}
                lifted = _lift_relations(relations, generators, n, index, field)
                lifted_rank = linalg.rank(lifted, field) if lifted else 0
                new_relations = kernel_dim - lifted_rank
                if new_relations > 0:
                    columns = [list(col) for col in zip(*rows)] if rows else []
                    for vec in linalg.kernel_basis(columns, field):
                        if linalg.rank(lifted + [vec], field) > lifted_rank:
                            lifted.append(vec)
                            lifted_rank += 1
                            relations.append((n, vec, exponents))

    if not found_any:
        warnings.warn("degree bound too small to see any section", stacklevel=2)
        return (), ()
    gen_degrees = tuple(sorted(d for d, _, _ in generators))
    rel_degrees = tuple(sorted(d for d, _, _ in relations))
    return gen_degrees, rel_degrees


def _generator_monomials(generators, total: int):
    """Exponent tuples over the current generators with weighted degree
    ``total``, in a fixed deterministic order."""
    degs = [d for d, _, _ in generators]
    out = []

    def rec(i, remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix + [0] * (len(degs) - i)))
            return
        if i == len(degs):
            return
        d = degs[i]
        for e in range(remaining // d + 1):
            rec(i + 1, remaining - d * e, prefix + [e])

    rec(0, total, [])
    return out


def _product_numerator(generators, exponents, target, ring: PolyRing) -> Polynomial:
    """Numerator of a product of generator sections over the canonical
    denominator of the target level."""
    used = {}
    product = ring.one()
    for (deg, num, floors), e in zip(generators, exponents):
        if not e:
            continue
        product = product * num**e
        for p, c in floors.items():
            used[p] = used.get(p, 0) + c * e
    for p, c in target.items():
        short = c - used.get(p, 0)
        if short < 0:
            raise AssertionError("floor superadditivity violated")
        if short:
            product = product * p.prime_form(ring) ** short
    return product


def _lift_relations(relations, generators, n, index, field):
    """Degree-n vectors spanned by earlier relations times generator
    monomials."""
    lifted = []
    for degree, vec, exponents in relations:
        for shift in _generator_monomials(generators, n - degree):
            row = [field.zero] * len(index)
            for e, coeff in zip(exponents, vec):
                if coeff:
                    combined = tuple(a + b for a, b in zip(e, shift))
                    # exponent tuples may be shorter if generators appeared later
                    combined = combined + shift[len(e):]
                    row[index[combined]] = field.add(row[index[combined]], coeff)
            lifted.append(row)
    return lifted


# ---------------------------------------------------------------------------
# Gorenstein test for section rings (fractional-part criterion)


def watanabe_gorenstein(divisor: QDivisor, a: int) -> bool:
    """Section ring R(P^1, D) is Gorenstein with a-invariant ``a`` iff
    K + D' - a*D is an integral divisor of degree 0, where D' takes the
    fractional-part coefficient (q-1)/q at each support point and the
    canonical divisor K contributes -2 to the degree."""
    if a == 0:
        raise InputError("the a-invariant test needs a nonzero integer")
    degree = Fraction(-2)
    for p, c in divisor.coefficients.items():
        dprime = Fraction(c.denominator - 1, c.denominator)
        adjusted = dprime - a * c
        if adjusted.denominator != 1:
            return False
        degree += adjusted
    return degree == 0


# ---------------------------------------------------------------------------
# cohomology tables and Segre/Kuenneth dimensions


class P1CohomologyTable:
    """n -> (h0, h1) of O(floor(n*D)) on P^1 for a fixed Q-divisor D."""

    def __init__(self, divisor: QDivisor):
        self.divisor = divisor
        self.genus = 0

    def h0(self, n: int) -> int:
        return h0(self.divisor.floor_multiple(n))

    def h1(self, n: int) -> int:
        return h1(self.divisor.floor_multiple(n))

    def describe(self) -> str:
        return f"P1({self.divisor})"


class EllipticCohomologyTable:
    """Fixed table for a degree-3 polarization of an elliptic curve:
    h0 = 1, 3n for n = 0, n >= 1, else 0, and h1(n) = h0(-n) (genus 1,
    trivial canonical divisor).  Valid away from characteristic 3."""

    genus = 1

    def h0(self, n: int) -> int:
        if n < 0:
            return 0
        if n == 0:
            return 1
        return 3 * n

    def h1(self, n: int) -> int:
        return self.h0(-n)

    def describe(self) -> str:
        return "elliptic(deg 3)"


def segre_hilbert(table1, table2, n: int) -> int:
    """dim of the degree-n piece of the Segre product: h0*h0."""
    return table1.h0(n) * table2.h0(n)


def segre_local_cohomology_dim(table1, table2, i: int, n: int) -> int:
    """Graded local cohomology of the Segre product S at the irrelevant
    ideal: dim H^i(S)_n = sum over p+q = i-1 of h^p(n)*h^q(n) by Kuenneth
    (valid for i >= 2, where local and sheaf cohomology agree)."""
    if i <= 1:
        raise UnsupportedRequestError(
            "local cohomology indices <= 1 are outside the sheaf identification"
        )
    total = 0
    for p in range(i):
        q = i - 1 - p
        hp = table1.h0(n) if p == 0 else table1.h1(n) if p == 1 else 0
        hq = table2.h0(n) if q == 0 else table2.h1(n) if q == 1 else 0
        total += hp * hq
    return total


def quasi_gorenstein_hilbert_check(table1, table2, a: int, n_range) -> bool:
    """Necessary condition for the canonical module of the surface Segre
    product to be S(a): the Hilbert function of top local cohomology at -n
    must match dim S_(n+a) for every n in the range.  Dimension data alone
    never proves the isomorphism; a True here is only consistency."""
    for n in n_range:
        if segre_local_cohomology_dim(table1, table2, 3, -n) != segre_hilbert(table1, table2, n + a):
            return False
    return True


# ---------------------------------------------------------------------------
# divisor expressions


def parse_divisor(text: str) -> QDivisor:
    """Parse expressions like ``2*P(0) - 5/8*P(1) + inf``."""
    stream = _TokenStream(tokenize(text))
    coefficients: list = []
    sign = 1
    if stream.accept("sym", "-"):
        sign = -1
    while True:
        coefficients.append(_parse_divisor_term(stream, sign))
        if stream.accept("sym", "+"):
            sign = 1
        elif stream.accept("sym", "-"):
            sign = -1
        else:
            break
    tail = stream.peek()
    if tail.kind != "end":
        raise ParseError(f"unexpected trailing input {tail.value!r}", tail.line, tail.column)
    return QDivisor(coefficients)


def _parse_divisor_term(stream: _TokenStream, sign: int):
    tok = stream.peek()
    coeff = Fraction(sign)
    if tok.kind == "int":
        stream.next()
        num = int(tok.value)
        den = 1
        if stream.accept("sym", "/"):
            den = int(stream.expect("int", what="denominator").value)
            if den == 0:
                raise ParseError("zero denominator", tok.line, tok.column)
        coeff *= Fraction(num, den)
        stream.expect("sym", "*", what="'*' between coefficient and point")
    return (_parse_point(stream), coeff)


def _parse_point(stream: _TokenStream) -> CurvePoint:
    tok = stream.expect("ident", what="a point (P(i) or inf)")
    if tok.value == "inf":
        return CurvePoint.infinity()
    if tok.value != "P":
        raise ParseError(f"unknown point {tok.value!r}", tok.line, tok.column)
    stream.expect("sym", "(", what="'('")
    negative = stream.accept("sym", "-") is not None
    itok = stream.expect("int", what="point scalar")
    stream.expect("sym", ")", what="')'")
    scalar = -int(itok.value) if negative else int(itok.value)
    return CurvePoint.finite(scalar)
