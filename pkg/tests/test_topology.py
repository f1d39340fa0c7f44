import pytest

from fuzztop.errors import PreconditionViolated
from fuzztop.topology import (Topology, check_continuity_nbhd, check_interior,
                              check_nbhd, check_topology, enumerate_topologies,
                              generate_topology, interior_from_topology,
                              is_continuous, nbhd_from_interior,
                              order_topologies)


def discrete(u):
    return Topology(universe=u, table=tuple(u.lattice.top
                                            for _ in range(u.n_sets)))


def indiscrete(u):
    lat = u.lattice
    table = [lat.bot] * u.n_sets
    table[u.zero_idx] = lat.top
    table[u.one_idx] = lat.top
    return Topology(universe=u, table=tuple(table))


def test_discrete_and_indiscrete_are_topologies(u22, u31_godel, u31_luk):
    for u in (u22, u31_godel, u31_luk):
        assert check_topology(discrete(u)).passed
        assert check_topology(indiscrete(u)).passed


def test_broken_o1_detected(u22):
    lat = u22.lattice
    table = [lat.top] * u22.n_sets
    table[u22.one_idx] = lat.bot
    rep = check_topology(Topology(universe=u22, table=tuple(table)))
    assert rep.verdicts["o1"].status == "fail"


def test_broken_o3_detected(u23):
    # grade a single atom high while keeping joins low
    lat = u23.lattice
    table = [lat.bot] * u23.n_sets
    table[u23.zero_idx] = lat.top
    table[u23.one_idx] = lat.top
    table[u23.set_index[(1, 0, 0)]] = lat.top
    table[u23.set_index[(0, 1, 0)]] = lat.top
    rep = check_topology(Topology(universe=u23, table=tuple(table)))
    assert rep.verdicts["o3"].status == "fail"


def test_order_topologies(u22):
    d, i = discrete(u22), indiscrete(u22)
    assert order_topologies(i, d) == "<="
    assert order_topologies(d, i) == ">="
    assert order_topologies(d, d) == "="


def test_order_topologies_incomparable(u32_godel):
    lat = u32_godel.lattice
    t1 = list(indiscrete(u32_godel).table)
    t2 = list(t1)
    t1[u32_godel.set_index[(2, 0)]] = lat.top
    t2[u32_godel.set_index[(0, 2)]] = lat.top
    t1 = Topology(universe=u32_godel, table=tuple(t1))
    t2 = Topology(universe=u32_godel, table=tuple(t2))
    assert check_topology(t1).passed and check_topology(t2).passed
    assert order_topologies(t1, t2) == "incomparable"


def test_generate_topology_is_a_topology(u23, u31_luk):
    for u in (u23, u31_luk):
        lat = u.lattice
        for si in range(u.n_sets):
            seed = [lat.bot] * u.n_sets
            seed[si] = lat.top
            assert check_topology(generate_topology(u, seed)).passed


def test_generate_topology_is_least(u22, u31_godel):
    # oracle: brute-force enumeration of every topology on the universe
    for u in (u22, u31_godel):
        lat = u.lattice
        all_tops = enumerate_topologies(u)
        for si in range(u.n_sets):
            seed = [lat.bot] * u.n_sets
            seed[si] = lat.top
            gen = generate_topology(u, seed)
            above = [t for t in all_tops
                     if all(lat.le(a, b) for a, b in zip(seed, t.table))]
            least = min(above, key=lambda t: sum(t.table))
            for t in above:
                assert order_topologies(gen, t) in ("<=", "=")
            assert order_topologies(gen, least) == "="


def test_enumeration_counts(u21, u22, u31_godel):
    assert len(enumerate_topologies(u21)) == 1
    assert len(enumerate_topologies(u22)) == 4
    assert len(enumerate_topologies(u31_godel)) == 3


def test_interior_axioms_hold_on_discrete(u22, u31_godel, u31_luk):
    for u in (u22, u31_godel, u31_luk):
        rep = check_interior(interior_from_topology(discrete(u)))
        assert rep.passed, rep


def test_interior_axioms_on_indiscrete(u22, u31_godel, u31_luk):
    # all axioms except the join-graded tensor stability I2, which no
    # non-discrete topology can satisfy (see the counterexample test below)
    for u in (u22, u31_godel, u31_luk):
        rep = check_interior(interior_from_topology(indiscrete(u)))
        for name, v in rep.verdicts.items():
            if name == "I2":
                assert v.status == "fail"
            else:
                assert v.status == "pass", (name, v.witness)


def test_join_graded_tensor_stability_counterexample(u22):
    # I(1_X, top) tensor I(g, bot) = g, yet I(g, top join bot) = I(g, top)
    # sits strictly below g whenever the grade of g is not top
    u = u22
    lat = u.lattice
    i = interior_from_topology(indiscrete(u))
    g = u.set_index[(0, 1)]
    lhs = u.pw_tensor[i.app(u.one_idx, lat.top)][i.app(g, lat.bot)]
    rhs = i.app(u.pw_tensor[u.one_idx][g], lat.join2(lat.top, lat.bot))
    assert lhs == g and rhs == u.zero_idx
    assert not u.pw_leq[lhs][rhs]


def test_tensor_graded_stability_holds(u22, u31_godel, u31_luk):
    # the tensor-graded variant I(f,a) tensor I(g,b) <= I(f tensor g, a
    # tensor b) is derivable from the topology axioms and holds throughout
    for u in (u22, u31_godel, u31_luk):
        lat = u.lattice
        for t in (discrete(u), indiscrete(u)):
            i = interior_from_topology(t)
            for si in range(u.n_sets):
                for a in lat.elements():
                    for sj in range(u.n_sets):
                        for b in lat.elements():
                            lhs = u.pw_tensor[i.app(si, a)][i.app(sj, b)]
                            rhs = i.app(u.pw_tensor[si][sj],
                                        u.tensor.app(a, b))
                            assert u.pw_leq[lhs][rhs]


def test_interior_values(u31_godel):
    u = u31_godel
    t = indiscrete(u)
    i = interior_from_topology(t)
    mid = u.set_index[(1,)]
    # only the zero set has a grade above bot other than the full set
    assert i.app(mid, u.lattice.top) == u.zero_idx
    assert i.app(mid, u.lattice.bot) == mid
    assert i.app(u.one_idx, u.lattice.top) == u.one_idx


def test_nbhd_axioms_hold_on_discrete(u22, u31_luk):
    for u in (u22, u31_luk):
        n = nbhd_from_interior(interior_from_topology(discrete(u)))
        assert check_nbhd(n).passed


def test_nbhd_axioms_on_indiscrete(u22, u31_luk):
    # N2 inherits the failure of the join-graded tensor stability I2
    for u in (u22, u31_luk):
        n = nbhd_from_interior(interior_from_topology(indiscrete(u)))
        rep = check_nbhd(n)
        for name, v in rep.verdicts.items():
            if name == "N2":
                assert v.status == "fail"
            else:
                assert v.status == "pass", (name, v.witness)


def test_nbhd_values_discrete(u22):
    u = u22
    n = nbhd_from_interior(interior_from_topology(discrete(u)))
    for p in u.ground.points():
        for si in range(u.n_sets):
            for a in u.lattice.elements():
                assert n.at(p, si, a) == u.sets[si][p]


def test_identity_map_is_continuous(u22):
    t = indiscrete(u22)
    ok, wit = is_continuous((0, 1), t, t)
    assert ok and wit is None


def test_discontinuous_map_has_witness(u22, u32_godel):
    # codomain finer than the (indiscrete) domain: identity fails
    u = u32_godel
    lat = u.lattice
    fine = list(indiscrete(u).table)
    fine[u.set_index[(2, 0)]] = lat.top
    eta = Topology(universe=u, table=tuple(fine))
    assert check_topology(eta).passed
    ok, wit = is_continuous((0, 1), indiscrete(u), eta)
    assert not ok
    assert wit == u.set_index[(2, 0)]


def test_constant_map_always_continuous(u21, u22):
    tau = discrete(u22)
    for t in enumerate_topologies(u21):
        ok, _ = is_continuous((0, 0), tau, t)
        assert ok


def test_continuity_nbhd_pushforward(u21, u22):
    phi = (0, 0)
    rep = check_continuity_nbhd(phi, discrete(u22), discrete(u21))
    assert rep.passed


def test_continuity_nbhd_preconditions(u21, u22, u32_godel):
    with pytest.raises(PreconditionViolated):
        check_continuity_nbhd((0,), discrete(u21), discrete(u22))  # not onto
    u = u32_godel
    lat = u.lattice
    fine = list(indiscrete(u).table)
    fine[u.set_index[(2, 0)]] = lat.top
    eta = Topology(universe=u, table=tuple(fine))
    with pytest.raises(PreconditionViolated):
        check_continuity_nbhd((0, 1), indiscrete(u), eta)  # not continuous
