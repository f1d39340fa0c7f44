"""Tour of grade-valued topologies, interiors, and neighborhoods.

Enumerates every topology on a small universe, generates least topologies
from seeds, derives interior and neighborhood tables, and shows the one
axiom clause the derivation does not satisfy, with its witness.
"""

from fuzztop import (Ground, Topology, Universe, boolean, check_interior,
                     check_nbhd, check_topology, enumerate_topologies,
                     generate_topology, interior_from_topology, meet_tensor,
                     nbhd_from_interior, order_topologies)


def main():
    lat = boolean()
    u = Universe(lat, meet_tensor(lat), Ground(2))
    print("universe: 2-element lattice, 2 points,", u.n_sets, "fuzzy sets")

    tops = enumerate_topologies(u)
    print(f"\nall topologies ({len(tops)}):")
    for t in tops:
        print("  grades", t.table, "valid:", check_topology(t).passed)

    print("\nleast topology containing the first coordinate set:")
    seed = [lat.bot] * u.n_sets
    seed[u.set_index[(1, 0)]] = lat.top
    gen = generate_topology(u, seed)
    print("  generated grades:", gen.table)
    for t in tops:
        rel = order_topologies(gen, t)
        print(f"  vs {t.table}: {rel}")

    indiscrete = next(t for t in tops
                      if sum(t.table) == 2 * lat.top)  # only 0_X and 1_X open
    i = interior_from_topology(indiscrete)
    print("\ninterior in the indiscrete space:")
    for si in range(u.n_sets):
        for a in lat.elements():
            print(f"  I({u.sets[si]}, {a}) = {u.sets[i.app(si, a)]}")

    rep = check_interior(i)
    print("\ninterior axiom battery:")
    for name in sorted(rep.verdicts):
        v = rep.verdicts[name]
        extra = f"  witness {v.witness}" if v.status == "fail" else ""
        print(f"  {name}: {v.status}{extra}")
    print("(the join-graded tensor stability clause is unsatisfiable for"
          " any non-discrete topology; every other clause passes)")

    n = nbhd_from_interior(i)
    print("\nneighborhood values at point 0, bottom grade:")
    for si in range(u.n_sets):
        print(f"  N_0({u.sets[si]}, bot) = {n.at(0, si, lat.bot)}")
    print("nbhd battery mirrors the interior battery:",
          sorted(check_nbhd(n).failures()))


if __name__ == "__main__":
    main()
