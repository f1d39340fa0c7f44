"""Command-line driver: parse a spec file, dispatch checks, emit reports.

Exit status: 0 when every verdict passed, 1 when any failed, 2 on usage,
parse, or size-cap errors.  With --format machine the output is a single
JSON document with no wall-clock content, so identical inputs produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .compactness import (Space, build_product, is_compact,
                          product_nbhd_system, tychonoff_check)
from .errors import FuzztopError, SizeLimit
from .filters import (FilterTable, NoFilterAbove, check_filter,
                      enumerate_filters, is_ultrafilter, saturate)
from .lattice import check_infinite_distributivity
from .report import Report
from .residuated import check_co_gl_monoid, check_cqm, check_gl_monoid, classify
from .specfile import build_universe, parse_spec
from .topology import (check_interior, check_nbhd, check_topology,
                       check_continuity_nbhd, interior_from_topology,
                       is_continuous, nbhd_from_interior)


def _parser():
    p = argparse.ArgumentParser(
        prog="fuzztop",
        description="Finite-model kernel for graded topology: validate "
                    "axioms, enumerate filters, decide compactness.")
    p.add_argument("spec", help="path to a spec file")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--max-subsets", type=int, default=20,
                   help="largest carrier for all-subsets sweeps (2**N)")
    p.add_argument("--max-powerset", type=int, default=4096)
    p.add_argument("--max-filters", type=int, default=200_000)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="run an axiom battery")
    v.add_argument("target", choices=("lattice", "cqm", "glmonoid",
                                      "co-glmonoid", "topology", "interior",
                                      "nbhd"))
    v.add_argument("--space", default=None)

    for name in ("residuum", "coimpl", "classify"):
        sub.add_parser(name)

    f = sub.add_parser("filters")
    f.add_argument("action", choices=("enumerate", "check", "ultrafilters"))
    f.add_argument("--space", default=None)
    f.add_argument("--filter", dest="filter_name", default=None)

    s = sub.add_parser("saturate")
    s.add_argument("--filter", dest="filter_name", required=True)

    c = sub.add_parser("compact")
    c.add_argument("--space", required=True)

    pr = sub.add_parser("product")
    pr.add_argument("--spaces", nargs="+", required=True)

    ty = sub.add_parser("tychonoff")
    ty.add_argument("--spaces", nargs="+", required=True)

    co = sub.add_parser("continuity")
    co.add_argument("--map", dest="map_name", required=True)
    return p


class _Kernel:
    """Resolved structures for one document, built lazily per space."""

    def __init__(self, doc, args):
        self.doc = doc
        self.args = args
        self.lattice = doc.build_lattice()
        self.tensor = doc.build_tensor(self.lattice)
        self.cotensor = doc.build_cotensor(self.lattice)
        self._universes = {}

    def universe(self, name):
        if name not in self.doc.spaces:
            raise FuzztopError(f"unknown space {name!r}")
        if name not in self._universes:
            self._universes[name] = build_universe(
                self.doc, name, powerset_cap=self.args.max_powerset)
        return self._universes[name]

    def space(self, name):
        return Space(self.universe(name), self.doc.spaces[name].topology,
                     validate=False)

    def topology(self, name):
        from .topology import Topology
        return Topology(universe=self.universe(name),
                        table=self.doc.spaces[name].topology)

    def named_filter(self, name):
        if name not in self.doc.filters:
            raise FuzztopError(f"unknown filter {name!r}")
        decl = self.doc.filters[name]
        return FilterTable(universe=self.universe(decl.space),
                           table=decl.table), decl.space

    def space_names(self, chosen):
        if chosen is not None:
            if chosen not in self.doc.spaces:
                raise FuzztopError(f"unknown space {chosen!r}")
            return [chosen]
        return sorted(self.doc.spaces)


def run_command(doc, args):
    """Dispatch one parsed command; returns (reports, extras)."""
    k = _Kernel(doc, args)
    cap = args.max_subsets
    reports, extras = [], {}

    if args.command == "validate":
        t = args.target
        if t == "lattice":
            reports.append(check_infinite_distributivity(k.lattice, cap=cap))
        elif t == "cqm":
            reports.append(check_cqm(k.tensor))
        elif t == "glmonoid":
            reports.append(check_gl_monoid(k.tensor, cap=cap))
        elif t == "co-glmonoid":
            reports.append(check_co_gl_monoid(k.cotensor, cap=cap))
        elif t == "topology":
            for name in k.space_names(args.space):
                r = check_topology(k.topology(name), cap=cap)
                r.name = f"topology[{name}]"
                reports.append(r)
        elif t == "interior":
            for name in k.space_names(args.space):
                r = check_interior(interior_from_topology(k.topology(name)))
                r.name = f"interior[{name}]"
                reports.append(r)
        elif t == "nbhd":
            for name in k.space_names(args.space):
                i = interior_from_topology(k.topology(name))
                r = check_nbhd(nbhd_from_interior(i))
                r.name = f"nbhd[{name}]"
                reports.append(r)

    elif args.command in ("residuum", "coimpl"):
        from .residuated import co_implication, residuum
        table = (residuum(k.tensor) if args.command == "residuum"
                 else co_implication(k.cotensor)).table
        names = doc.element_names
        extras["table"] = {
            f"{names[a]} {names[b]}": names[table[a][b]]
            for a in range(len(names)) for b in range(len(names))}
        r = Report(args.command)
        r.record_pass("computed")
        reports.append(r)

    elif args.command == "classify":
        from .residuated import residuum
        tags = classify(k.tensor, residuum(k.tensor))
        extras["tags"] = sorted(tags)
        r = Report("classify")
        r.record_pass("computed")
        reports.append(r)

    elif args.command == "filters":
        if args.action == "check":
            if not args.filter_name:
                raise FuzztopError("filters check requires --filter")
            F, _ = k.named_filter(args.filter_name)
            r = check_filter(F)
            r.name = f"filter[{args.filter_name}]"
            reports.append(r)
        else:
            names = k.space_names(args.space)
            for name in names:
                u = k.universe(name)
                fs = enumerate_filters(u, cap=args.max_filters)
                if args.action == "enumerate":
                    extras.setdefault("counts", {})[name] = len(fs)
                    extras.setdefault("tables", {})[name] = [
                        list(F.table) for F in fs]
                    r = Report(f"filters[{name}]")
                    r.record_pass("enumerated")
                    reports.append(r)
                else:
                    ultras = []
                    agree = True
                    for F in fs:
                        um, _ = is_ultrafilter(F, "maximality", all_filters=fs)
                        uc, _ = is_ultrafilter(F, "characterization")
                        agree = agree and um == uc
                        if uc:
                            ultras.append(list(F.table))
                    extras.setdefault("counts", {})[name] = len(ultras)
                    extras.setdefault("tables", {})[name] = ultras
                    r = Report(f"ultrafilters[{name}]")
                    r.record("modes_agree", agree, None)
                    reports.append(r)

    elif args.command == "saturate":
        F, _ = k.named_filter(args.filter_name)
        result = saturate(F.universe, F.table)
        r = Report(f"saturate[{args.filter_name}]")
        if isinstance(result, NoFilterAbove):
            extras["no_filter_above"] = {"alpha": result.alpha}
            r.record_pass("no_filter_above")
        else:
            extras["filter"] = list(result.table)
            r.record("is_filter", check_filter(result).passed, None)
        reports.append(r)

    elif args.command == "compact":
        space = k.space(args.space)
        fs = enumerate_filters(space.universe, cap=args.max_filters)
        sweep, witness = is_compact(space, filters=fs)
        fast, _ = is_compact(space, mode="ultrafilter", filters=fs)
        r = Report(f"compact[{args.space}]")
        r.record("compact", sweep,
                 None if sweep else {"filter": list(witness.table)})
        r.record("fast_path_agrees", sweep == fast, (sweep, fast))
        reports.append(r)

    elif args.command == "product":
        factors = [k.space(n) for n in args.spaces]
        P = build_product(factors, powerset_cap=args.max_powerset)
        r = Report("product[" + ",".join(args.spaces) + "]")
        r.record("topology_valid", check_topology(P.space.topology).passed, None)
        for i, f in enumerate(factors):
            cont, wit = is_continuous(P.projections[i], P.space.topology,
                                      f.topology)
            r.record(f"projection_{i}_continuous", cont, wit)
        nb = product_nbhd_system(P)
        r.record("formula_nbhd_valid", check_nbhd(nb).passed, None)
        extras["product_points"] = [list(t) for t in P.point_tuples]
        extras["product_topology"] = list(P.space.topology.table)
        reports.append(r)

    elif args.command == "tychonoff":
        factors = [k.space(n) for n in args.spaces]
        reports.append(tychonoff_check(factors))

    elif args.command == "continuity":
        if args.map_name not in doc.maps:
            raise FuzztopError(f"unknown map {args.map_name!r}")
        decl = doc.maps[args.map_name]
        tau = k.topology(decl.src)
        eta = k.topology(decl.dst)
        cont, wit = is_continuous(decl.mapping, tau, eta)
        r = Report(f"continuity[{args.map_name}]")
        r.record("continuous", cont,
                 None if cont else {"g": list(eta.universe.sets[wit])})
        reports.append(r)
        surjective = set(decl.mapping) == set(range(doc.spaces[decl.dst].points))
        if cont and surjective:
            reports.append(check_continuity_nbhd(decl.mapping, tau, eta))

    return reports, extras


def _render(args, reports, extras, elapsed):
    ok = all(r.passed for r in reports)
    if args.format == "machine":
        tree = {
            "command": args.command,
            "passed": ok,
            "reports": [r.to_dict() for r in reports],
        }
        if extras:
            tree["results"] = extras
        return json.dumps(tree, sort_keys=True, indent=2) + "\n", ok
    lines = [str(r) for r in reports]
    for key, value in extras.items():
        lines.append(f"{key}: {value}")
    lines.append(f"elapsed: {elapsed:.3f}s")
    return "\n".join(lines) + "\n", ok


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        with open(args.spec, encoding="utf-8") as fh:
            doc = parse_spec(fh.read())
        start = time.monotonic()
        reports, extras = run_command(doc, args)
        elapsed = time.monotonic() - start
    except (FuzztopError, OSError) as exc:
        print(f"fuzztop: error: {exc}", file=sys.stderr)
        return 2
    text, ok = _render(args, reports, extras, elapsed)
    sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
