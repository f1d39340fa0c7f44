"""Graded filters on a finite ground set.

A filter is a total grade table over the graded carrier satisfying FF0-FF3.
Enumeration walks monotone tables with the pinned top/bottom rows and keeps
those passing the tensor-stability axiom; saturation computes the least
filter above a seed by an inflationary fixpoint of the monotonicity and
tensor-stability rules.  The ultrafilter characterization and the hat
extension follow their explicit formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotAChain, NotSurjective, PreconditionViolated, SizeLimit
from .report import Report

DEFAULT_FILTER_CAP = 200_000


@dataclass(frozen=True)
class FilterTable:
    universe: object
    table: tuple  # grade per graded cell

    def app(self, si, a):
        return self.table[self.universe.gidx(si, a)]

    def leq(self, other):
        lat = self.universe.lattice
        return all(lat.le(a, b) for a, b in zip(self.table, other.table))


def check_filter(F):
    """Per-axiom verdicts for FF0 (top row pinned to top), FF1 (monotone in
    the graded order), FF2 (tensor stability), FF3 (bottom row pinned)."""
    u = F.universe
    lat = u.lattice
    report = Report("filter")

    ok = all(F.app(u.one_idx, a) == lat.top for a in lat.elements())
    report.record("FF0", ok,
                  None if ok else {"row": [F.app(u.one_idx, a)
                                           for a in lat.elements()]})

    ok = True
    for gi in u.graded_cells():
        for gj in u.graded_cells():
            if u.graded_leq(gi, gj) and not lat.le(F.table[gi], F.table[gj]):
                report.record_fail("FF1", {"cells": (u.gpair(gi), u.gpair(gj))})
                ok = False
    if ok:
        report.record_pass("FF1")

    ok = True
    for si in range(u.n_sets):
        for a in lat.elements():
            for sj in range(u.n_sets):
                for b in lat.elements():
                    lhs = u.tensor.app(F.app(si, a), F.app(sj, b))
                    rhs = F.app(u.pw_tensor[si][sj], lat.join2(a, b))
                    if not lat.le(lhs, rhs):
                        report.record_fail("FF2", {"cells": (si, a, sj, b)})
                        ok = False
    if ok:
        report.record_pass("FF2")

    ok = all(F.app(u.zero_idx, a) == lat.bot for a in lat.elements())
    report.record("FF3", ok,
                  None if ok else {"row": [F.app(u.zero_idx, a)
                                           for a in lat.elements()]})
    return report


def _ff2_holds(u, table):
    lat = u.lattice
    for gi in u.graded_cells():
        si, a = u.gpair(gi)
        for gj in range(gi, u.graded_size):
            sj, b = u.gpair(gj)
            lhs = lat.join2(a, b)
            if not lat.le(u.tensor.app(table[gi], table[gj]),
                          table[u.gidx(u.pw_tensor[si][sj], lhs)]):
                return False
    return True


def enumerate_filters(universe, cap=DEFAULT_FILTER_CAP):
    """All filters on the universe, in canonical (table-lexicographic) order.

    Enumerates monotone tables by backtracking along a linear extension of
    the graded order, with the FF0/FF3 rows pinned, then keeps the tables
    satisfying FF2.  Raises SizeLimit when the monotone-map search would
    visit more than `cap` partial assignments.
    """
    u = universe
    lat = u.lattice
    size = u.graded_size

    pinned = {}
    for a in lat.elements():
        pinned[u.gidx(u.one_idx, a)] = lat.top
        pinned[u.gidx(u.zero_idx, a)] = lat.bot

    below = [[gj for gj in range(size)
              if gj != gi and u.graded_leq(gj, gi)] for gi in range(size)]
    above = [[gj for gj in range(size)
              if gj != gi and u.graded_leq(gi, gj)] for gi in range(size)]
    # static bounds induced by the pinned cells
    lo = [lat.join_set([pinned[b] for b in below[gi] if b in pinned])
          for gi in range(size)]
    hi = [lat.meet_set([pinned[b] for b in above[gi] if b in pinned])
          for gi in range(size)]

    order = sorted(range(size), key=lambda gi: len(below[gi]))
    rank = {gi: k for k, gi in enumerate(order)}

    table = [None] * size
    results = []
    visited = 0

    def assign(k):
        nonlocal visited
        if k == size:
            if _ff2_holds(u, table):
                results.append(tuple(table))
            return
        gi = order[k]
        visited += 1
        if visited > cap:
            raise SizeLimit(f"monotone enumeration exceeded cap {cap}")
        if gi in pinned:
            choices = [pinned[gi]]
        else:
            floor = lo[gi]
            for b in below[gi]:
                if rank[b] < k:
                    floor = lat.join2(floor, table[b])
            choices = [v for v in lat.elements()
                       if lat.le(floor, v) and lat.le(v, hi[gi])]
        for v in choices:
            table[gi] = v
            assign(k + 1)
        table[gi] = None

    assign(0)
    results.sort()
    return [FilterTable(universe=u, table=t) for t in results]


def enumerate_filters_bruteforce(universe, cap=DEFAULT_FILTER_CAP):
    """Raw table sweep over every grade assignment; the census oracle."""
    u = universe
    total = u.lattice.n ** u.graded_size
    if total > cap:
        raise SizeLimit(f"{total} candidate tables exceeds cap {cap}")
    out = []
    for values in itertools.product(u.lattice.elements(), repeat=u.graded_size):
        F = FilterTable(universe=u, table=values)
        if check_filter(F).passed:
            out.append(F)
    return out


def sup_of_chain(chain):
    """Pointwise join of a chain of filters; a filter again."""
    if not chain:
        raise NotAChain("empty chain")
    u = chain[0].universe
    lat = u.lattice
    for F in chain:
        for G in chain:
            if not (F.leq(G) or G.leq(F)):
                raise NotAChain("filters are not pairwise comparable")
    table = tuple(lat.join_set([F.table[gi] for F in chain])
                  for gi in u.graded_cells())
    return FilterTable(universe=u, table=table)


@dataclass(frozen=True)
class NoFilterAbove:
    """Returned by saturate when no filter dominates the seed; carries the
    offending bottom-row grade and the closed table."""

    alpha: int
    table: tuple


def saturate(universe, seed):
    """Least table above the seed closed under the filter rules.

    Forces the top row to top, transports values up the graded order, and
    applies the tensor rule until a fixpoint; returns the FilterTable if the
    bottom row stayed at bot, otherwise NoFilterAbove.
    """
    u = universe
    lat = u.lattice
    table = list(seed)
    for a in lat.elements():
        gi = u.gidx(u.one_idx, a)
        table[gi] = lat.top

    above = [[gj for gj in u.graded_cells()
              if gj != gi and u.graded_leq(gi, gj)] for gi in u.graded_cells()]
    changed = True
    while changed:
        changed = False
        for gi in u.graded_cells():
            v = table[gi]
            for gj in above[gi]:
                w = lat.join2(table[gj], v)
                if w != table[gj]:
                    table[gj] = w
                    changed = True
        for gi in u.graded_cells():
            for gj in range(gi, u.graded_size):
                k = u.boxtimes(gi, gj)
                w = lat.join2(table[k], u.tensor.app(table[gi], table[gj]))
                if w != table[k]:
                    table[k] = w
                    changed = True
    for a in lat.elements():
        v = table[u.gidx(u.zero_idx, a)]
        if v != lat.bot:
            return NoFilterAbove(alpha=a, table=tuple(table))
    return FilterTable(universe=u, table=tuple(table))


def hat_extension(U, g_idx, beta, rho=None):
    """The extension table built from a fixed target cell (g, beta).

    With G = impl-into-bottom of U at the cell (g, beta) => (0_X, rho), the
    value at (f, a) is U(f, a) joined with U[(g, beta) => (f, a)] tensor G.
    rho must satisfy rho <= beta; defaults to the lattice bottom.
    """
    u = U.universe
    lat = u.lattice
    if rho is None:
        rho = lat.bot
    if not lat.le(rho, beta):
        raise PreconditionViolated("rho must lie below beta")
    gb = u.gidx(g_idx, beta)
    zero_rho = u.gidx(u.zero_idx, rho)
    g_beta = u.res.app(U.table[u.gimpl(gb, zero_rho)], lat.bot)
    table = []
    for gi in u.graded_cells():
        extra = u.tensor.app(U.table[u.gimpl(gb, gi)], g_beta)
        table.append(lat.join2(U.table[gi], extra))
    return FilterTable(universe=u, table=tuple(table))


def _characterization_holds(U):
    u = U.universe
    lat = u.lattice
    for gi in u.graded_cells():
        _, a = u.gpair(gi)
        for rho in lat.elements():
            if not lat.le(rho, a):
                continue
            val = u.res.app(U.table[u.gimpl(gi, u.gidx(u.zero_idx, rho))],
                            lat.bot)
            if val != U.table[gi]:
                return False, {"cell": u.gpair(gi), "rho": rho,
                               "expected": val, "actual": U.table[gi]}
    return True, None


def is_ultrafilter(U, mode="characterization", all_filters=None,
                   cap=DEFAULT_FILTER_CAP):
    """Decide maximality of a filter.

    mode="maximality": search for a strictly larger filter (all_filters may
    supply a precomputed enumeration).  mode="characterization": test the
    impl-into-bottom identity on every cell and every grade below the cell's.
    Returns (bool, witness).
    """
    if not check_filter(U).passed:
        raise PreconditionViolated("input does not pass the filter axioms")
    if mode == "characterization":
        ok, witness = _characterization_holds(U)
        return ok, witness
    if mode == "maximality":
        if all_filters is None:
            all_filters = enumerate_filters(U.universe, cap=cap)
        for G in all_filters:
            if U.leq(G) and U.table != G.table:
                return False, {"larger": G.table}
        return True, None
    raise ValueError(f"unknown mode {mode!r}")


def image_filter(phi, F, cod_universe):
    """Pushforward along a point map: value at (g, b) is F(g o phi, b)."""
    u = F.universe
    uy = cod_universe
    table = []
    for sj in range(uy.n_sets):
        pulled = uy.compose(phi, sj, u)
        for b in uy.lattice.elements():
            table.append(F.app(pulled, b))
    return FilterTable(universe=uy, table=tuple(table))


def preimage_filter(phi, F, dom_universe):
    """Pullback along a surjective point map.

    Value at (f, a) is the join of F(g, b) over all codomain cells whose
    pullback sits below (f, a) in the graded order.
    """
    uy = F.universe
    ux = dom_universe
    lat = ux.lattice
    if set(phi) != set(uy.ground.points()):
        raise NotSurjective("point map misses some codomain point")
    table = []
    for si in range(ux.n_sets):
        for a in lat.elements():
            vals = []
            for sj in range(uy.n_sets):
                pulled = uy.compose(phi, sj, ux)
                if not ux.pw_leq[pulled][si]:
                    continue
                for b in lat.elements():
                    if lat.le(a, b):
                        vals.append(F.app(sj, b))
            table.append(lat.join_set(vals))
    return FilterTable(universe=ux, table=tuple(table))
