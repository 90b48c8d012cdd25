"""Monomial orders as key functions on exponent tuples.

An order object turns an exponent tuple into a flat tuple of ints such
that monomial comparison is tuple comparison on keys (bigger key, bigger
monomial).  All orders here are total and multiplicative.

The graded reverse lexicographic order grades by the ring's weights.  A
declared weight may be 0; such variables contribute a secondary degree
(the total exponent over all weight-0 variables) right after the weighted
degree, which keeps the order a well-order; otherwise division would not
terminate in rings like k[Z1..Z9, Y] with Y of weight 0.
"""

from __future__ import annotations

from .errors import InputError


class GrevlexOrder:
    """Weighted graded reverse lexicographic order."""

    name = "grevlex"

    def __init__(self, weights):
        self.weights = tuple(int(w) for w in weights)
        if any(w < 0 for w in self.weights):
            raise InputError("monomial order weights must be non-negative")
        self._zero_positions = tuple(i for i, w in enumerate(self.weights) if w == 0)

    def key(self, m):
        w = self.weights
        wdeg = 0
        for i, e in enumerate(m):
            if e:
                wdeg += w[i] * e
        zdeg = sum(m[i] for i in self._zero_positions)
        return (wdeg, zdeg) + tuple(-e for e in reversed(m))

    def restricted_to(self, positions):
        return GrevlexOrder(tuple(self.weights[i] for i in positions))

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder) and self.weights == other.weights

    def __hash__(self):
        return hash(("grevlex", self.weights))

    def __repr__(self):
        return f"GrevlexOrder(weights={self.weights})"


class LexOrder:
    """Pure lexicographic order (first variable dominant)."""

    name = "lex"

    def __init__(self, nvars: int):
        self.nvars = nvars

    def key(self, m):
        return tuple(m)

    def restricted_to(self, positions):
        return LexOrder(len(positions))

    def __eq__(self, other):
        return isinstance(other, LexOrder) and self.nvars == other.nvars

    def __hash__(self):
        return hash(("lex", self.nvars))

    def __repr__(self):
        return f"LexOrder({self.nvars})"


class BlockOrder:
    """Elimination order: earlier blocks dominate, each block ordered by its
    own sub-order on the block's variables.

    ``blocks`` is a sequence of ``(positions, suborder)`` pairs where
    ``positions`` are variable indices into the full exponent tuple.  The
    blocks must partition the variables.
    """

    name = "block"

    def __init__(self, blocks):
        self.blocks = tuple((tuple(pos), sub) for pos, sub in blocks)
        seen = [i for pos, _ in self.blocks for i in pos]
        if len(seen) != len(set(seen)):
            raise InputError("block order blocks must be disjoint")

    def key(self, m):
        out = []
        for positions, sub in self.blocks:
            out.extend(sub.key(tuple(m[i] for i in positions)))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(("block", self.blocks))

    def __repr__(self):
        return f"BlockOrder({self.blocks!r})"


def elimination_order(nvars: int, eliminate_positions, base_order):
    """Block order making ``eliminate_positions`` dominant over the rest.

    The remaining variables keep ``base_order`` restricted to them, so on
    polynomials free of the eliminated variables the two orders agree.
    """
    elim = tuple(sorted(eliminate_positions))
    if not elim:
        return base_order
    rest = tuple(i for i in range(nvars) if i not in set(elim))
    if not rest:
        return base_order
    if isinstance(base_order, BlockOrder):
        raise InputError("nested block orders are not supported")
    first = base_order.restricted_to(elim)
    second = base_order.restricted_to(rest)
    return BlockOrder([(elim, first), (rest, second)])
