"""Tour of the compactness engine.

Decides compactness by the adherent-point oracle, compares the ultrafilter
fast path with the full sweep, replays the continuous-image argument, and
runs the product construction with the explicit neighborhood formula up to
the finite product theorem.
"""

from fuzztop import (Ground, Space, Universe, boolean, build_product,
                     check_nbhd, converges, adherent_points,
                     enumerate_filters, enumerate_topologies,
                     image_compactness_check, is_compact, is_ultrafilter,
                     meet_tensor, product_convergence_check,
                     product_nbhd_system, tychonoff_check)


def main():
    lat = boolean()
    u = Universe(lat, meet_tensor(lat), Ground(2))

    print("compactness of every topology on the 2-point boolean universe:")
    filters = enumerate_filters(u)
    for t in enumerate_topologies(u):
        space = Space(u, t)
        sweep, _ = is_compact(space, filters=filters)
        fast, _ = is_compact(space, mode="ultrafilter", filters=filters)
        print(f"  grades {t.table}: compact={sweep}, fast path agrees:"
              f" {sweep == fast}")

    space = Space(u, tuple(lat.top for _ in range(u.n_sets)))
    print("\nadherent points in the discrete space:")
    for F in filters:
        print("  filter", F.table, "->", adherent_points(F, space))

    print("\ncontinuous image of a compact space is compact:")
    u1 = Universe(lat, meet_tensor(lat), Ground(1))
    target = Space(u1, tuple(lat.top for _ in range(u1.n_sets)))
    rep = image_compactness_check((0, 0), space, target)
    for name in sorted(rep.verdicts):
        print(f"  {name}: {rep.verdicts[name].status}")

    print("\ntwo-factor product:")
    P = build_product([space, space])
    print("  ground points:", P.point_tuples)
    formula = product_nbhd_system(P)
    print("  explicit neighborhood formula passes the axiom battery:",
          check_nbhd(formula).passed)
    prod_filters = enumerate_filters(P.universe)
    ultras = [F for F in prod_filters if is_ultrafilter(F)[0]]
    print(f"  {len(prod_filters)} filters, {len(ultras)} ultrafilters")
    for U in ultras:
        rep = product_convergence_check(P, U, formula_nbhd=formula)
        pts = [p for p in range(P.universe.ground.m)
               if converges(U, p, P.space)]
        print("  ultrafilter converges to", pts,
              "componentwise equivalence:", rep.passed)

    print("\nfinite product theorem:")
    rep = tychonoff_check([space, space], product=P)
    for name in sorted(rep.verdicts):
        print(f"  {name}: {rep.verdicts[name].status}")


if __name__ == "__main__":
    main()
