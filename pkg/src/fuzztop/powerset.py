"""The fuzzy powerset over a finite ground set and the graded carrier.

A fuzzy set is a length-m tuple of lattice element indices.  The Universe
precomputes the whole powerset in lexicographic order together with pointwise
operation tables, and exposes the product carrier (powerset x lattice) under
the graded order: (f, a) below (g, b) iff f <= g pointwise and b <= a.
Graded cells are flat indices gi = set_index * n + grade so every table over
the carrier is a plain array.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import SizeLimit
from .lattice import MAX_SUBSET_ELEMENTS, lattice_from_order
from .report import Report
from .residuated import Tensor, check_gl_monoid, co_implication, residuum

DEFAULT_POWERSET_CAP = 4096


@dataclass(frozen=True)
class Ground:
    """A finite ground set of m points with optional display names."""

    m: int
    names: tuple = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("ground set must be non-empty")

    def points(self):
        return range(self.m)


def enumerate_powerset(lat, ground, cap=DEFAULT_POWERSET_CAP):
    """All |L|**m fuzzy sets as tuples, in lexicographic order."""
    total = lat.n ** ground.m
    if total > cap:
        raise SizeLimit(f"powerset size {total} exceeds cap {cap}")
    return [tuple(v) for v in itertools.product(lat.elements(), repeat=ground.m)]


class Universe:
    """Ambient data for one ground set: powerset, graded carrier, tables.

    Bundles the lattice, a GL tensor with its residuum, and a cotensor
    (default: the lattice join) with its co-implication.  All pointwise and
    graded operation tables are precomputed at construction.
    """

    def __init__(self, lattice, tensor, ground, cotensor=None,
                 powerset_cap=DEFAULT_POWERSET_CAP):
        from .instances import join_cotensor  # avoid a cyclic import

        self.lattice = lattice
        self.tensor = tensor
        self.cotensor = cotensor if cotensor is not None else join_cotensor(lattice)
        self.ground = ground
        self.res = residuum(tensor)
        self.coimpl = co_implication(self.cotensor)

        self.sets = enumerate_powerset(lattice, ground, powerset_cap)
        self.set_index = {s: i for i, s in enumerate(self.sets)}
        self.n_sets = len(self.sets)
        self.zero_idx = self.set_index[tuple([lattice.bot] * ground.m)]
        self.one_idx = self.set_index[tuple([lattice.top] * ground.m)]

        n_sets, sets, lat = self.n_sets, self.sets, lattice
        self.pw_leq = tuple(
            tuple(all(lat.le(f[p], g[p]) for p in ground.points()) for g in sets)
            for f in sets
        )
        self.pw_tensor = self._pointwise_table(tensor.app)
        self.pw_join = self._pointwise_table(lat.join2)
        self.pw_meet = self._pointwise_table(lat.meet2)

        # graded carrier: gi = si * n + a
        self.n = lattice.n
        self.graded_size = n_sets * lattice.n

    def _pointwise_table(self, op):
        idx = self.set_index
        pts = self.ground.points()
        return tuple(
            tuple(idx[tuple(op(f[p], g[p]) for p in pts)] for g in self.sets)
            for f in self.sets
        )

    # ---- pointwise operations on set indices -------------------------------

    def set_leq(self, i, j):
        return self.pw_leq[i][j]

    def tensor_sets(self, i, j):
        return self.pw_tensor[i][j]

    def join_sets(self, indices):
        out = self.zero_idx
        for i in indices:
            out = self.pw_join[out][i]
        return out

    def meet_sets(self, indices):
        out = self.one_idx
        for i in indices:
            out = self.pw_meet[out][i]
        return out

    # ---- graded carrier ----------------------------------------------------

    def gidx(self, si, a):
        return si * self.n + a

    def gpair(self, gi):
        return divmod(gi, self.n)

    def graded_cells(self):
        return range(self.graded_size)

    def graded_leq(self, gi, gj):
        si, a = divmod(gi, self.n)
        sj, b = divmod(gj, self.n)
        return self.pw_leq[si][sj] and self.lattice.le(b, a)

    @property
    def graded_top(self):
        return self.gidx(self.one_idx, self.lattice.bot)

    @property
    def graded_bot(self):
        return self.gidx(self.zero_idx, self.lattice.top)

    def boxtimes(self, gi, gj):
        """(f, a) boxtimes (g, b) = (f tensor g, a join b), componentwise."""
        si, a = divmod(gi, self.n)
        sj, b = divmod(gj, self.n)
        return self.gidx(self.pw_tensor[si][sj], self.lattice.join2(a, b))

    def gimpl(self, gi, gj):
        """Graded residuation by closed form: (f -> g, b coimpl a)."""
        si, a = divmod(gi, self.n)
        sj, b = divmod(gj, self.n)
        res, pts, idx = self.res, self.ground.points(), self.set_index
        f, g = self.sets[si], self.sets[sj]
        impl_set = idx[tuple(res.app(f[p], g[p]) for p in pts)]
        return self.gidx(impl_set, self.coimpl.app(b, a))

    def gimpl_sup(self, gi, gj):
        """Graded residuation by its sup-form definition (test oracle).

        Join, in the graded order, of all (h, e) with h tensor f <= g and
        b <= e join a; the graded join is (pointwise join, lattice meet).
        """
        si, a = divmod(gi, self.n)
        sj, b = divmod(gj, self.n)
        lat = self.lattice
        set_acc, grade_acc = self.zero_idx, lat.top
        for hi in range(self.n_sets):
            for e in lat.elements():
                if self.pw_leq[self.pw_tensor[hi][si]][sj] \
                        and lat.le(b, self.cotensor.app(e, a)):
                    set_acc = self.pw_join[set_acc][hi]
                    grade_acc = lat.meet2(grade_acc, e)
        return self.gidx(set_acc, grade_acc)

    def graded_join(self, gis):
        """Componentwise join in the graded order (grades use the meet)."""
        set_acc, grade_acc = self.zero_idx, self.lattice.top
        for gi in gis:
            si, a = divmod(gi, self.n)
            set_acc = self.pw_join[set_acc][si]
            grade_acc = self.lattice.meet2(grade_acc, a)
        return self.gidx(set_acc, grade_acc)

    def graded_meet(self, gis):
        """Componentwise meet in the graded order (grades use the join)."""
        set_acc, grade_acc = self.one_idx, self.lattice.bot
        for gi in gis:
            si, a = divmod(gi, self.n)
            set_acc = self.pw_meet[set_acc][si]
            grade_acc = self.lattice.join2(grade_acc, a)
        return self.gidx(set_acc, grade_acc)

    def graded_lattice(self):
        """The graded carrier packaged as a plain Lattice over flat indices."""
        leq = [[self.graded_leq(i, j) for j in self.graded_cells()]
               for i in self.graded_cells()]
        return lattice_from_order(leq)

    def compose(self, phi, g_idx, dom_universe):
        """Pull a fuzzy set on this universe back along a point map.

        phi maps points of dom_universe's ground into this ground; returns
        the set index of g o phi in dom_universe.
        """
        g = self.sets[g_idx]
        pulled = tuple(g[phi[p]] for p in dom_universe.ground.points())
        return dom_universe.set_index[pulled]


def check_graded_gl(universe, cap=MAX_SUBSET_ELEMENTS):
    """Run the full GL axiom battery on the graded carrier.

    Packages (powerset x lattice, graded order, boxtimes) as an abstract
    lattice-with-tensor and reuses the element-level checker, then verifies
    the graded residuation: closed form vs sup form, the adjunction, and the
    two auxiliary inequalities (the second only for idempotent tensors).
    """
    report = Report("graded_gl")
    glat = universe.graded_lattice()
    cells = list(universe.graded_cells())
    box = tuple(tuple(universe.boxtimes(i, j) for j in cells) for i in cells)
    gl = check_gl_monoid(Tensor(base=glat, table=box, kind="tensor"), cap=cap)
    report.verdicts.update(gl.verdicts)

    report.record("top_is_one_bot", glat.top == universe.graded_top,
                  (glat.top, universe.graded_top))
    report.record("bot_is_zero_top", glat.bot == universe.graded_bot,
                  (glat.bot, universe.graded_bot))

    # componentwise joins/meets agree with the order-theoretic ones
    ok = True
    for i in cells:
        for j in cells:
            if universe.graded_join([i, j]) != glat.join2(i, j) or \
                    universe.graded_meet([i, j]) != glat.meet2(i, j):
                report.record_fail("componentwise_bounds", (i, j))
                ok = False
    if ok:
        report.record_pass("componentwise_bounds")

    impl = tuple(tuple(universe.gimpl(i, j) for j in cells) for i in cells)
    ok = True
    for i in cells:
        for j in cells:
            if impl[i][j] != universe.gimpl_sup(i, j):
                report.record_fail("impl_closed_vs_sup", (i, j))
                ok = False
    if ok:
        report.record_pass("impl_closed_vs_sup")

    ok = True
    for a in cells:
        for b in cells:
            for c in cells:
                if universe.graded_leq(box[a][b], c) != \
                        universe.graded_leq(a, impl[b][c]):
                    report.record_fail("adjunction", (a, b, c))
                    ok = False
    if ok:
        report.record_pass("adjunction")

    ok = True
    for a in cells:
        for b in cells:
            for c in cells:
                if not universe.graded_leq(box[a][impl[b][c]],
                                           impl[b][box[a][c]]):
                    report.record_fail("tensor_impl_exchange", (a, b, c))
                    ok = False
    if ok:
        report.record_pass("tensor_impl_exchange")

    lat = universe.lattice
    idempotent = all(universe.tensor.app(x, x) == x for x in lat.elements())
    if idempotent:
        ok = True
        for a in cells:
            for b in cells:
                for c in cells:
                    if not universe.graded_leq(box[impl[b][a]][impl[b][c]],
                                               impl[b][box[a][c]]):
                        report.record_fail("impl_product_exchange", (a, b, c))
                        ok = False
        if ok:
            report.record_pass("impl_product_exchange")
    else:
        report.record_skip("impl_product_exchange", "tensor not idempotent")
    return report
