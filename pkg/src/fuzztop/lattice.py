"""Finite complete lattices: carrier, order, join/meet tables, distributivity.

Elements are dense integer indices 0..n-1; the order and the binary join/meet
are precomputed as full tables so every later sweep is a table lookup.
"Arbitrary" joins and meets are realized over explicit finite subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Degenerate, NotALattice, NotAPartialOrder, SizeLimit
from .report import Report

#: largest carrier for which all-subsets sweeps are attempted (2**n subsets)
MAX_SUBSET_ELEMENTS = 20


@dataclass(frozen=True)
class Lattice:
    """A finite lattice with precomputed order and join/meet tables."""

    n: int
    leq: tuple          # n x n booleans
    join: tuple         # n x n element indices
    meet: tuple         # n x n element indices
    top: int
    bot: int

    def elements(self):
        return range(self.n)

    def le(self, a, b):
        return self.leq[a][b]

    def join2(self, a, b):
        return self.join[a][b]

    def meet2(self, a, b):
        return self.meet[a][b]

    def join_set(self, elems):
        """Least upper bound of a finite subset; the empty join is bot."""
        out = self.bot
        for e in elems:
            out = self.join[out][e]
        return out

    def meet_set(self, elems):
        """Greatest lower bound of a finite subset; the empty meet is top."""
        out = self.top
        for e in elems:
            out = self.meet[out][e]
        return out

    def subsets(self, cap=MAX_SUBSET_ELEMENTS):
        """All subsets of the carrier as element lists, the empty set first."""
        if self.n > cap:
            raise SizeLimit(f"2**{self.n} subsets exceeds cap 2**{cap}")
        for mask in range(1 << self.n):
            yield [i for i in range(self.n) if mask >> i & 1]


def lattice_from_order(leq):
    """Build a Lattice from a full order relation (n x n boolean rows).

    The relation must already be a partial order; raises NotALattice if some
    pair lacks a least upper or greatest lower bound.
    """
    n = len(leq)
    join = [[None] * n for _ in range(n)]
    meet = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            ub = [c for c in range(n) if leq[a][c] and leq[b][c]]
            lub = [u for u in ub if all(leq[u][c] for c in ub)]
            if len(lub) != 1:
                raise NotALattice(f"elements {a},{b} have no least upper bound")
            join[a][b] = lub[0]
            lb = [c for c in range(n) if leq[c][a] and leq[c][b]]
            glb = [u for u in lb if all(leq[c][u] for c in lb)]
            if len(glb) != 1:
                raise NotALattice(f"elements {a},{b} have no greatest lower bound")
            meet[a][b] = glb[0]
    top = 0
    bot = 0
    for e in range(n):
        top = join[top][e]
        bot = meet[bot][e]
    return Lattice(
        n=n,
        leq=tuple(tuple(row) for row in leq),
        join=tuple(tuple(row) for row in join),
        meet=tuple(tuple(row) for row in meet),
        top=top,
        bot=bot,
    )


def build_lattice(n, leq_pairs):
    """Build a Lattice from a carrier size and a list of (lower, upper) pairs.

    The order is the reflexive-transitive closure of the pairs.  Raises
    Degenerate for n < 2, NotAPartialOrder if the closure violates
    antisymmetry, NotALattice if some pair lacks a lub or glb.
    """
    if n < 2:
        raise Degenerate(f"carrier size {n} < 2")
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in leq_pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise NotAPartialOrder(f"pair ({a},{b}) outside carrier 0..{n - 1}")
        leq[a][b] = True
    for k in range(n):  # Warshall closure
        for i in range(n):
            if leq[i][k]:
                row_i, row_k = leq[i], leq[k]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    for a in range(n):
        for b in range(a + 1, n):
            if leq[a][b] and leq[b][a]:
                raise NotAPartialOrder(f"antisymmetry fails on {a},{b}")
    return lattice_from_order(leq)


def check_infinite_distributivity(lat, cap=MAX_SUBSET_ELEMENTS):
    """Check both infinite-distributivity laws over every subset and scalar.

    For every subset A and element x the report verifies
    (join A) meet x == join {a meet x} and (meet A) join x == meet {a join x}.
    """
    report = Report("infinite_distributivity")
    try:
        subsets = list(lat.subsets(cap))
    except SizeLimit:
        report.record_skip("join_meet_distributive")
        report.record_skip("meet_join_distributive")
        return report
    for axiom, agg, inner in (
        ("join_meet_distributive", lat.join_set, lat.meet2),
        ("meet_join_distributive", lat.meet_set, lat.join2),
    ):
        ok = True
        for subset in subsets:
            for x in lat.elements():
                lhs = inner(agg(subset), x)
                rhs = agg([inner(a, x) for a in subset])
                if lhs != rhs:
                    report.record_fail(axiom, {"subset": tuple(subset), "x": x,
                                               "lhs": lhs, "rhs": rhs})
                    ok = False
                    break
            if not ok:
                break
        if ok:
            report.record_pass(axiom)
    return report
