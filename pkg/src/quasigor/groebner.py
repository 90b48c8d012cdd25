"""Deterministic Buchberger engine.

Division ("normal form") always cancels the largest remaining term against
the first listed reducer whose leading monomial divides it, so remainders
are reproducible.  The basis completion applies the coprime-leading-term
criterion and the chain criterion while updating the pair set
(Gebauer-Moeller style pruning), selects pairs by the normal strategy
(minimal weighted degree of the lcm, ties broken by the monomial order on
the lcm, then by pair indices), and finishes with full interreduction and
monic normalization.  The output is the reduced Groebner basis, which is
unique for a given ideal and order, hence independent of the order in
which generators are supplied.
"""

from __future__ import annotations

import heapq

from .errors import InputError, RingMismatchError
from .rings import (
    Polynomial,
    PolyRing,
    monomial_coprime,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


class GroebnerBasis:
    """A reduced Groebner basis: monic, fully interreduced, sorted by
    ascending leading monomial.  Immutable and safe to share."""

    __slots__ = ("ring", "order", "polys", "_reducers")

    def __init__(self, ring: PolyRing, order, polys):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self._reducers = None

    def leading_monomials(self):
        return tuple(p.leading_monomial() for p in self.polys)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and bool(self.polys[0])

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring.names != self.ring.names or f.ring.field != self.ring.field:
            raise RingMismatchError("polynomial does not belong to the basis ring")
        if self._reducers is None:
            weights = self.ring.weights
            self._reducers = [
                (
                    p.leading_monomial(),
                    sum(w * e for w, e in zip(weights, p.leading_monomial())),
                    p.terms[1:],
                )
                for p in self.polys
            ]
        engine = _Engine(self.ring)
        terms = engine.normal_form_terms(f.terms, self._reducers)
        return Polynomial(self.ring, terms)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.polys == other.polys
        )

    def __hash__(self):
        return hash((self.ring, self.polys))

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements)"


class _Engine:
    """Shared machinery: cached monomial keys and the division loop."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.field = ring.field
        self.weights = ring.weights
        self._keyfn = ring.order.key
        self._negkeys = {}

    def negkey(self, m):
        nk = self._negkeys.get(m)
        if nk is None:
            nk = tuple(-x for x in self._keyfn(m))
            self._negkeys[m] = nk
        return nk

    def wdeg(self, m) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def sort_terms(self, items):
        """Descending in the order = ascending in the negated key."""
        negkey = self.negkey
        return tuple(sorted(items, key=lambda t: negkey(t[0])))

    def normal_form_terms(self, items, reducers):
        """Fully reduce; ``reducers`` are (lm, lm_wdeg, tail) with monic lm.

        Returns the remainder as a descending terms tuple.
        """
        p = dict(items)
        if not p:
            return ()
        field = self.field
        sub, mul, neg = field.sub, field.mul, field.neg
        negkey = self.negkey
        heap = [(negkey(m), m) for m in p]
        heapq.heapify(heap)
        push, pop = heapq.heappush, heapq.heappop
        remainder = []
        while heap:
            _, m = pop(heap)
            c = p.pop(m, None)
            if c is None:
                continue
            mdeg = self.wdeg(m)
            hit = None
            for lm, lmdeg, tail in reducers:
                if lmdeg <= mdeg and monomial_divides(lm, m):
                    hit = (lm, tail)
                    break
            if hit is None:
                remainder.append((m, c))
                continue
            lm, tail = hit
            q = monomial_div(m, lm)
            for mg, cg in tail:
                mm = monomial_mul(mg, q)
                delta = mul(c, cg)
                prev = p.get(mm)
                if prev is None:
                    p[mm] = neg(delta)
                    push(heap, (negkey(mm), mm))
                else:
                    s = sub(prev, delta)
                    if s:
                        p[mm] = s
                    else:
                        del p[mm]
        return tuple(remainder)

    def spoly_dict(self, f, g):
        """S-polynomial of two monic (lm, terms) records, as a dict."""
        lm_f, terms_f = f
        lm_g, terms_g = g
        lcm = monomial_lcm(lm_f, lm_g)
        qf = monomial_div(lcm, lm_f)
        qg = monomial_div(lcm, lm_g)
        field = self.field
        acc = {}
        for m, c in terms_f:
            acc[monomial_mul(m, qf)] = c
        for m, c in terms_g:
            mm = monomial_mul(m, qg)
            prev = acc.get(mm)
            if prev is None:
                acc[mm] = field.neg(c)
            else:
                s = field.sub(prev, c)
                if s:
                    acc[mm] = s
                else:
                    del acc[mm]
        return acc

    def make_monic(self, terms):
        if not terms:
            return terms
        lc = terms[0][1]
        if lc == self.field.one:
            return terms
        inv = self.field.inv(lc)
        mul = self.field.mul
        return tuple((m, mul(inv, c)) for m, c in terms)


def _common_ring(polys) -> PolyRing:
    rings = {f.ring for f in polys}
    if len(rings) != 1:
        raise RingMismatchError("polynomials belong to different rings")
    return next(iter(rings))


def _working_ring(ring: PolyRing, order) -> PolyRing:
    if order is None or order == ring.order:
        return ring
    return ring.with_order(order)


def _to_work(f: Polynomial, work: PolyRing) -> Polynomial:
    if f.ring is work or f.ring == work:
        return f
    return work.polynomial(dict(f.terms))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """lcm-cancellation of the leading terms of two nonzero polynomials."""
    if not f or not g:
        raise InputError("S-polynomials need nonzero inputs")
    ring = _common_ring([f, g])
    engine = _Engine(ring)
    fm = (f.leading_monomial(), engine.make_monic(f.terms))
    gm = (g.leading_monomial(), engine.make_monic(g.terms))
    return ring.polynomial(engine.spoly_dict(fm, gm))


def normal_form(f: Polynomial, basis, order=None) -> Polynomial:
    """Remainder of f on division by ``basis`` (any list of nonzero
    polynomials, not necessarily a Groebner basis).

    Deterministic: the largest reducible term is always cancelled by the
    first listed reducer.  No term of the result is divisible by any
    reducer's leading monomial, and f minus the result lies in the ideal
    the reducers generate.
    """
    basis = list(basis)
    if not basis or any(not g for g in basis):
        raise InputError("reducers must be nonzero")
    ring = _common_ring([f] + basis)
    work = _working_ring(ring, order)
    engine = _Engine(work)
    reducers = []
    for g in basis:
        g = _to_work(g, work)
        terms = engine.make_monic(g.terms)
        lm = terms[0][0]
        reducers.append((lm, engine.wdeg(lm), terms[1:]))
    f = _to_work(f, work)
    result = Polynomial(work, engine.normal_form_terms(f.terms, reducers))
    if work is ring:
        return result
    return ring.polynomial(dict(result.terms))


def buchberger(generators, order=None, trace=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal the generators span.

    The result is independent of generator permutation (reduced bases are
    unique).  ``trace``, when given, receives one line of text per pair
    considered and per basis update.
    """
    gens = [g for g in generators if g is not None]
    if not gens:
        raise InputError("no generators given")
    ring = _common_ring(gens)
    work = _working_ring(ring, order)
    engine = _Engine(work)
    negkey = engine.negkey

    seed = []
    seen = set()
    for g in gens:
        g = _to_work(g, work)
        if not g:
            continue
        terms = engine.make_monic(engine.sort_terms(g.terms))
        if terms not in seen:
            seen.add(terms)
            seed.append(terms)
    if not seed:
        raise InputError("all generators are zero")
    seed.sort(key=lambda terms: [negkey(m) for m, _ in terms])

    basis = _interreduce(engine, seed)
    records = [(terms[0][0], terms) for terms in basis]
    reducers = None  # rebuilt lazily after each basis change

    pairs = []
    current = []
    for idx in range(len(records)):
        current, pairs = _update_pairs(engine, records, current, pairs, idx)

    n_zero = 0
    while pairs:
        where = min(range(len(pairs)), key=lambda k: pairs[k][0])
        best = pairs.pop(where)
        (i, j), lcm = best[2], best[3]
        if trace:
            trace(f"pair ({i},{j}) lcm={work.monomial_str(lcm)}")
        s_dict = engine.spoly_dict(records[i], records[j])
        if reducers is None:
            by_ascending_lm = sorted(
                current, key=lambda k: engine.negkey(records[k][0]), reverse=True
            )
            reducers = [
                (records[k][0], engine.wdeg(records[k][0]), records[k][1][1:])
                for k in by_ascending_lm
            ]
        remainder = engine.normal_form_terms(s_dict.items(), reducers)
        if not remainder:
            n_zero += 1
            if trace:
                trace("  -> reduced to 0")
            continue
        terms = engine.make_monic(remainder)
        records.append((terms[0][0], terms))
        new_idx = len(records) - 1
        if trace:
            trace(f"  -> new element g{new_idx}: lm={work.monomial_str(terms[0][0])}")
        current, pairs = _update_pairs(engine, records, current, pairs, new_idx)
        reducers = None
    if trace:
        trace(f"{n_zero} pairs reduced to zero")

    final = _reduce_final(engine, [records[k] for k in sorted(current)])
    polys = [Polynomial(work, terms) for terms in final]
    polys.sort(key=lambda p: negkey(p.leading_monomial()), reverse=True)
    return GroebnerBasis(work, work.order, polys)


def _interreduce(engine, seed):
    """Reduce each element against the others until nothing changes."""
    current = list(seed)
    while True:
        changed = False
        nxt = []
        for i, terms in enumerate(current):
            others = nxt + current[i + 1 :]
            if others:
                reducers = [(t[0][0], engine.wdeg(t[0][0]), t[1:]) for t in others]
                reduced = engine.normal_form_terms(terms, reducers)
            else:
                reduced = terms
            if reduced != terms:
                changed = True
            if reduced:
                nxt.append(engine.make_monic(reduced))
        current = nxt
        if not changed:
            return current


def _pair_record(engine, records, i, j):
    lm_i = records[i][0]
    lm_j = records[j][0]
    lcm = monomial_lcm(lm_i, lm_j)
    selection = (engine.wdeg(lcm), engine._keyfn(lcm), i, j)
    return (selection, (lm_i, lm_j), (i, j), lcm)


def _update_pairs(engine, records, current, pairs, new_idx):
    """Gebauer-Moeller pair update when basis element ``new_idx`` arrives.

    Applies the coprime-leading-term criterion and the chain criterion,
    processing candidates in deterministic (sorted index) order.
    """
    lm_new = records[new_idx][0]

    candidates = []
    survivors = []
    for idx in sorted(current):
        candidates.append((idx, monomial_lcm(lm_new, records[idx][0])))
    for pos, (idx, lcm) in enumerate(candidates):
        coprime = monomial_coprime(lm_new, records[idx][0])
        if coprime:
            survivors.append((idx, lcm, True))
            continue
        dominated = False
        for pos2, (idx2, lcm2) in enumerate(candidates):
            if pos2 == pos:
                continue
            if lcm2 != lcm and monomial_divides(lcm2, lcm):
                dominated = True
                break
            if lcm2 == lcm and pos2 < pos:
                dominated = True
                break
        if not dominated:
            survivors.append((idx, lcm, False))

    new_pairs = [
        _pair_record(engine, records, idx, new_idx)
        for idx, lcm, coprime in survivors
        if not coprime
    ]

    kept = []
    for rec in pairs:
        (lm_i, lm_j) = rec[1]
        lcm_ij = rec[3]
        if not monomial_divides(lm_new, lcm_ij):
            kept.append(rec)
        elif monomial_lcm(lm_i, lm_new) == lcm_ij or monomial_lcm(lm_j, lm_new) == lcm_ij:
            kept.append(rec)
    kept.extend(new_pairs)

    new_current = [idx for idx in current if not monomial_divides(lm_new, records[idx][0])]
    new_current.append(new_idx)
    return new_current, kept


def _reduce_final(engine, records):
    """Minimize, then tail-reduce every element against all the others."""
    records = sorted(records, key=lambda rec: engine.negkey(rec[0]))
    lms = [lm for lm, _ in records]
    minimal = [
        (lm, terms)
        for i, (lm, terms) in enumerate(records)
        if not any(j != i and monomial_divides(lms[j], lm) for j in range(len(lms)))
    ]
    reduced = []
    for i, (lm, terms) in enumerate(minimal):
        others = [rec for j, rec in enumerate(minimal) if j != i]
        if others:
            reducers = [(o[0], engine.wdeg(o[0]), o[1][1:]) for o in others]
            new_terms = engine.normal_form_terms(terms, reducers)
        else:
            new_terms = terms
        reduced.append(engine.make_monic(new_terms))
    return [t for t in reduced if t]


def ideal_membership(f: Polynomial, basis) -> bool:
    """True iff f reduces to zero against the (computed) Groebner basis."""
    if isinstance(basis, GroebnerBasis):
        return basis.contains(f)
    gb = buchberger(list(basis))
    work_f = _to_work(f, gb.ring)
    return gb.contains(work_f)
