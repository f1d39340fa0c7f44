"""Tour of graded filters: enumeration, saturation, ultrafilters, transport.

Shows the full filter census on small universes, the least-filter-above
construction and its failure mode, the two ultrafilter tests agreeing, and
pushforward/pullback along a surjection.
"""

from fuzztop import (Ground, NoFilterAbove, Universe, boolean, chain,
                     check_filter, enumerate_filters, hat_extension,
                     image_filter, is_ultrafilter, lukasiewicz_tensor,
                     meet_tensor, preimage_filter, saturate)


def main():
    lat = boolean()
    u = Universe(lat, meet_tensor(lat), Ground(2))
    filters = enumerate_filters(u)
    print(f"filters on the 2-point boolean universe: {len(filters)}")
    for F in filters:
        ultra = is_ultrafilter(F)[0]
        print("  table", F.table, "ultra:", ultra)

    print("\nsaturation from a single demanded cell:")
    seed = [lat.bot] * u.graded_size
    seed[u.gidx(u.set_index[(1, 0)], lat.bot)] = lat.top
    out = saturate(u, tuple(seed))
    print("  seed wants the first point set at full value ->", out.table)

    seed[u.gidx(u.set_index[(0, 1)], lat.bot)] = lat.top
    out = saturate(u, tuple(seed))
    assert isinstance(out, NoFilterAbove)
    print("  demanding both disjoint points collapses: no filter above,"
          f" empty set forced to grade {out.alpha}")

    print("\nhat extensions fix ultrafilters and grow the rest:")
    c3 = chain(3)
    ug = Universe(c3, meet_tensor(c3), Ground(1))
    for F in enumerate_filters(ug):
        grew = any(hat_extension(F, g, beta).table != F.table
                   for g in range(ug.n_sets) for beta in c3.elements())
        print("  table", F.table,
              "ultra:", is_ultrafilter(F)[0], "some hat grows it:", grew)

    print("\ntransport along the collapse of 2 points onto 1:")
    u1 = Universe(lat, meet_tensor(lat), Ground(1))
    phi = (0, 0)
    for F in enumerate_filters(u1):
        pre = preimage_filter(phi, F, u)
        back = image_filter(phi, pre, u1)
        print("  filter", F.table, "pullback is filter:",
              check_filter(pre).passed, "round trip exact:",
              back.table == F.table)


if __name__ == "__main__":
    main()
