"""Convergence, adherence, the compactness oracle, products, Tychonoff.

A Space bundles a validated topology with its derived interior operator and
neighborhood system.  Compactness is decided by brute force: every filter
must have an adherent point, where adherence is decided constructively by
saturating the join of the filter with the point's neighborhood table.
Finite products are built as the least topology making the projections
continuous; the explicit product neighborhood formula doubles as a
consistency check on that construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import PreconditionViolated, SizeLimit
from .filters import (FilterTable, NoFilterAbove, check_filter,
                      enumerate_filters, image_filter, is_ultrafilter,
                      preimage_filter, saturate)
from .powerset import DEFAULT_POWERSET_CAP, Ground, Universe
from .report import Report
from .topology import (NbhdSystem, Topology, check_interior, check_nbhd,
                       check_topology, generate_topology,
                       interior_from_topology, is_continuous,
                       nbhd_from_interior)


class Space:
    """An L-fuzzy topological space with derived structures.

    Construction insists on the topology axioms.  The interior and
    neighborhood axiom batteries are run too, but their outcomes are kept as
    reports rather than enforced: the tensor-stability axioms I2 and N2
    combine grades with the join, and the interior derived from any
    non-discrete topology violates that combination (take the full set at
    grade top against any set of grade below top at grade bottom), so
    enforcing them would reject almost every space.
    """

    def __init__(self, universe, topology, validate=True):
        if not isinstance(topology, Topology):
            topology = Topology(universe=universe, table=tuple(topology))
        self.universe = universe
        self.topology = topology
        if validate and not check_topology(topology).passed:
            raise ValueError("table is not a topology:\n"
                             + str(check_topology(topology)))
        self.interior = interior_from_topology(topology)
        self.nbhd = nbhd_from_interior(self.interior)
        self.interior_report = check_interior(self.interior) if validate else None
        self.nbhd_report = check_nbhd(self.nbhd) if validate else None


def converges(F, p, space):
    """True iff the neighborhood table at p sits below the filter."""
    lat = space.universe.lattice
    tab = space.nbhd.tables[p]
    return all(lat.le(tab[gi], F.table[gi])
               for gi in space.universe.graded_cells())


def is_adherent(p, F, space):
    """Decide adherence of p to F; returns (bool, certificate).

    The certificate is the least filter dominating both F and the
    neighborhood table at p, found by saturation; adherence fails exactly
    when that saturation collapses the bottom row.
    """
    u = space.universe
    lat = u.lattice
    tab = space.nbhd.tables[p]
    seed = tuple(lat.join2(tab[gi], F.table[gi]) for gi in u.graded_cells())
    G = saturate(u, seed)
    if isinstance(G, NoFilterAbove):
        return False, None
    return True, G


def adherent_points(F, space):
    return [p for p in space.universe.ground.points()
            if is_adherent(p, F, space)[0]]


def is_compact(space, mode="sweep", filters=None, cap=None):
    """Decide compactness: every filter has at least one adherent point.

    mode="sweep" checks every enumerated filter; mode="ultrafilter" checks
    ultrafilters only (equivalent: an adherence certificate for an
    ultrafilter above F also witnesses adherence for F).  Returns
    (bool, witness filter or None).
    """
    u = space.universe
    if filters is None:
        filters = enumerate_filters(u) if cap is None else enumerate_filters(u, cap)
    if mode == "ultrafilter":
        filters = [F for F in filters
                   if is_ultrafilter(F, "characterization")[0]]
    elif mode != "sweep":
        raise ValueError(f"unknown mode {mode!r}")
    for F in filters:
        if not adherent_points(F, space):
            return False, F
    return True, None


def image_compactness_check(phi, space_x, space_y, filters_y=None):
    """Continuous surjective images of compact spaces are compact.

    Verifies the conclusion and replays the proof skeleton for every filter
    on the codomain: pull the filter back, find an adherent point upstream,
    push the certificate forward, and confirm it witnesses adherence of the
    image point.
    """
    ux, uy = space_x.universe, space_y.universe
    cont, _ = is_continuous(phi, space_x.topology, space_y.topology)
    if not cont:
        raise PreconditionViolated("map is not continuous")
    if set(phi) != set(uy.ground.points()):
        raise PreconditionViolated("map is not surjective")
    compact_x, _ = is_compact(space_x)
    if not compact_x:
        raise PreconditionViolated("domain space is not compact")

    report = Report("image_compactness")
    lat = ux.lattice
    if filters_y is None:
        filters_y = enumerate_filters(uy)
    ok_round = ok_chain = ok_adherent = True
    for F in filters_y:
        Fpre = preimage_filter(phi, F, ux)
        report.record("preimage_is_filter", check_filter(Fpre).passed,
                      {"filter": F.table})
        round_trip = image_filter(phi, Fpre, uy)
        if round_trip.table != F.table:
            report.record_fail("round_trip", {"filter": F.table})
            ok_round = False
        points = [p for p in ux.ground.points() if is_adherent(p, Fpre, space_x)[0]]
        if not points:
            report.record_fail("adherent_upstream", {"filter": F.table})
            ok_adherent = False
            continue
        p = points[0]
        _, G = is_adherent(p, Fpre, space_x)
        G_img = image_filter(phi, G, uy)
        nb_y = space_y.nbhd.tables[phi[p]]
        dominated = F.leq(G_img) and all(
            lat.le(nb_y[gj], G_img.table[gj]) for gj in uy.graded_cells())
        if not dominated:
            report.record_fail("proof_chain", {"filter": F.table, "p": p})
            ok_chain = False
        if not is_adherent(phi[p], F, space_y)[0]:
            report.record_fail("image_point_adherent", {"filter": F.table})
            ok_adherent = False
    if ok_round:
        report.record_pass("round_trip")
    if ok_chain:
        report.record_pass("proof_chain")
    if ok_adherent:
        report.record_pass("image_point_adherent")
    compact_y, witness = is_compact(space_y, filters=filters_y)
    report.record("codomain_compact", compact_y,
                  None if compact_y else {"filter": witness.table})
    return report


@dataclass
class ProductSpace:
    factors: list
    space: Space
    projections: tuple       # per factor: product point index -> factor point
    point_tuples: tuple = field(default=())

    @property
    def universe(self):
        return self.space.universe


def build_product(factors, powerset_cap=DEFAULT_POWERSET_CAP):
    """The finite topological product: ground is the cartesian product and
    the topology is generated from the pulled-back factor gradings.

    All factors must share the lattice and tensor.  At most three factors
    are supported (SizeLimit beyond that); each projection is verified
    continuous.
    """
    if not factors:
        raise PreconditionViolated("need at least one factor")
    if len(factors) > 3:
        raise SizeLimit("at most three factors are supported")
    base = factors[0].universe
    for f in factors[1:]:
        if f.universe.lattice is not base.lattice and \
                f.universe.lattice != base.lattice:
            raise PreconditionViolated("factors must share the lattice")
        if f.universe.tensor.table != base.tensor.table:
            raise PreconditionViolated("factors must share the tensor")

    point_tuples = tuple(itertools.product(
        *[f.universe.ground.points() for f in factors]))
    ground = Ground(m=len(point_tuples))
    u = Universe(base.lattice, base.tensor, ground,
                 cotensor=base.cotensor, powerset_cap=powerset_cap)
    projections = tuple(
        tuple(pt[k] for pt in point_tuples) for k in range(len(factors)))

    lat = u.lattice
    seed = [lat.bot] * u.n_sets
    for k, f in enumerate(factors):
        fu = f.universe
        for hi in range(fu.n_sets):
            h = fu.sets[hi]
            pulled = u.set_index[tuple(h[projections[k][p]]
                                       for p in range(ground.m))]
            seed[pulled] = lat.join2(seed[pulled], f.topology.table[hi])
    topo = generate_topology(u, tuple(seed))
    space = Space(u, topo)
    for k, f in enumerate(factors):
        cont, wit = is_continuous(projections[k], topo, f.topology)
        if not cont:
            raise AssertionError(f"projection {k} not continuous, witness {wit}")
    return ProductSpace(factors=list(factors), space=space,
                        projections=projections, point_tuples=point_tuples)


def _fold_tensor(lat, tensor, values):
    out = lat.top
    for v in values:
        out = tensor.app(out, v)
    return out


def product_nbhd(P, p, f_idx, alpha):
    """The explicit product neighborhood value at point p and cell (f, a).

    Joins, over every factor tuple h whose pulled-back tensor product sits
    below f and whose factor grades tensor above a, the tensor of the factor
    neighborhood values.
    """
    u = P.universe
    lat = u.lattice
    tensor = u.tensor
    p_tuple = P.point_tuples[p]
    acc = lat.bot
    for h in itertools.product(*[range(f.universe.n_sets) for f in P.factors]):
        pullback = u.one_idx
        for k, f in enumerate(P.factors):
            hset = f.universe.sets[h[k]]
            pulled = u.set_index[tuple(hset[P.projections[k][q]]
                                       for q in range(u.ground.m))]
            pullback = u.pw_tensor[pullback][pulled]
        if not u.pw_leq[pullback][f_idx]:
            continue
        grade = _fold_tensor(lat, tensor,
                             [f.topology.table[h[k]]
                              for k, f in enumerate(P.factors)])
        if not lat.le(alpha, grade):
            continue
        val = _fold_tensor(lat, tensor,
                           [f.nbhd.tables[p_tuple[k]][
                               f.universe.gidx(h[k], alpha)]
                            for k, f in enumerate(P.factors)])
        acc = lat.join2(acc, val)
    return acc


def product_nbhd_system(P):
    """The full per-point table of the explicit product formula."""
    u = P.universe
    tables = []
    for p in range(u.ground.m):
        row = []
        for si in range(u.n_sets):
            for a in u.lattice.elements():
                row.append(product_nbhd(P, p, si, a))
        tables.append(tuple(row))
    return NbhdSystem(universe=u, tables=tuple(tables))


def product_convergence_check(P, U, formula_nbhd=None):
    """Ultrafilter convergence in the product is componentwise.

    For every product point, convergence against the explicit product
    neighborhood formula must agree with convergence of every projected
    filter in its factor.
    """
    u = P.universe
    lat = u.lattice
    if not check_filter(U).passed:
        raise PreconditionViolated("input does not pass the filter axioms")
    if not is_ultrafilter(U, "characterization")[0]:
        raise PreconditionViolated("input is not an ultrafilter")
    if formula_nbhd is None:
        formula_nbhd = product_nbhd_system(P)
    report = Report("product_convergence")
    images = [image_filter(P.projections[k], U, f.universe)
              for k, f in enumerate(P.factors)]
    ok = True
    for p in range(u.ground.m):
        lhs = all(lat.le(formula_nbhd.tables[p][gi], U.table[gi])
                  for gi in u.graded_cells())
        rhs = all(converges(images[k], P.point_tuples[p][k], f)
                  for k, f in enumerate(P.factors))
        if lhs != rhs:
            report.record_fail("componentwise_convergence",
                               {"point": p, "product": lhs, "factors": rhs})
            ok = False
    if ok:
        report.record_pass("componentwise_convergence")
    return report


def tychonoff_check(factors, product=None):
    """All factors compact iff the product is compact, decided by oracle."""
    report = Report("tychonoff")
    factor_verdicts = []
    for k, f in enumerate(factors):
        compact, witness = is_compact(f)
        factor_verdicts.append(compact)
        report.record(f"factor_{k}_compact", compact,
                      None if compact else {"filter": witness.table})
    if product is None:
        product = build_product(factors)
    compact_p, witness = is_compact(product.space)
    report.record("product_compact", compact_p,
                  None if compact_p else {"filter": witness.table})
    report.record("biconditional", all(factor_verdicts) == compact_p,
                  {"factors": factor_verdicts, "product": compact_p})
    return report
