"""Command-line front end.

Exit status: 0 all checks pass, 1 a verification failed, 2 bad usage or
input, 3 a size cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .colouring import validate_certificate, verify_weak_perfectness
from .divisors import FactorisationError, alpha_de_bruijn, delta_clique_number
from .errors import CapExceeded, DescriptorError, InvalidGroupError
from .farey import build_colour_families, verify_colour_families, verify_key_observation
from .graphs import CHROMATIC_CAP, CLIQUE_CAP, clique_number_exact
from .groups import DEFAULT_GROUP_CAP, FiniteGroup, construct_group
from .powergraphs import (GRAPH_CAP, build_gk_graph, build_graph, delta_adjacent,
                          isolated_large_primes, large_primes)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

PENTAGON_S8 = ("(1,2)", "(3,4,5)", "(6,7)", "(1,2,3)", "(4,5,6,7,8)")


class UsageError(Exception):
    pass


def _fmt_set(xs) -> str:
    return "{" + ", ".join(map(str, xs)) + "}"


def _emit(text: str, out: str | None):
    if text and not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _group(args) -> FiniteGroup:
    return construct_group(args.group, cap=args.group_cap)


# -- commands --------------------------------------------------------------


def cmd_families(args) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    fam = build_colour_families(args.n)
    status = EXIT_OK
    reports = []
    if args.verify:
        reports = [verify_colour_families(fam), verify_key_observation(args.n)]
        if not all(reports):
            status = EXIT_FAIL
    if args.format == "json":
        doc = {"n": fam.n, "sets": {str(q): list(s) for q, s in enumerate(fam.sets, 1)}}
        if reports:
            doc["verification"] = {r.name: {"status": "pass" if r else "fail", "checks": r.checked,
                                            "violations": [list(map(str, v)) for v in r.violations[:10]]}
                                   for r in reports}
        _emit(_dump(doc), args.out)
    else:
        lines = [fam.render()]
        lines += [r.summary() for r in reports]
        _emit("\n".join(lines), args.out)
    return status


def cmd_verify(args) -> int:
    G = _group(args)
    cert = verify_weak_perfectness(
        G, exact=args.exact, graph_cap=args.cap,
        clique_cap=args.clique_cap, chromatic_cap=args.chromatic_cap)
    cert.group = args.group
    doc = cert.as_dict()
    _emit(_dump(doc), args.out)
    if args.out:
        print(f"{args.group}: n={cert.n} {'pass' if cert.ok else 'FAIL'}")
    return EXIT_OK if cert.ok else EXIT_FAIL


def cmd_check_cert(args) -> int:
    data = json.loads(Path(args.certificate).read_text())
    G = construct_group(data["group"], cap=args.group_cap)
    report = validate_certificate(data, G)
    print(report.summary())
    return EXIT_OK if report else EXIT_FAIL


def _graph_text(G: FiniteGroup, kind: str, fmt: str, cap: int) -> str:
    if kind == "gk":
        gk = build_gk_graph(G)
        if fmt == "edges":
            return "".join(f"{p} {q}\n" for p, q in gk.sorted_edges())
        if fmt == "json":
            return _dump({"group": G.name, "kind": "gk", "vertices": list(gk.primes),
                          "edges": [list(e) for e in gk.sorted_edges()]})
        body = [f"  p{p};" for p in gk.primes] + [f"  p{p} -- p{q};" for p, q in gk.sorted_edges()]
        return "graph GK {\n" + "\n".join(body) + ("\n" if body else "") + "}\n"

    g = build_graph(G, kind, cap=cap)
    orders = G.orders
    if fmt == "edges":
        return "".join(f"{u} {v}\n" for u, v in g.edges())
    if fmt == "json":
        return _dump({"group": G.name, "kind": kind,
                      "vertices": [{"id": v, "order": orders[v]} for v in range(g.vertex_count)],
                      "edges": [[u, v] for u, v in g.edges()]})
    name = lambda v: f"e{v}_o{orders[v]}"  # noqa: E731
    body = [f"  {name(v)};" for v in range(g.vertex_count)]
    body += [f"  {name(u)} -- {name(v)};" for u, v in g.edges()]
    return f"graph {kind} {{\n" + "\n".join(body) + "\n}\n"


def cmd_graph(args) -> int:
    G = _group(args)
    _emit(_graph_text(G, args.kind, args.format, args.cap), args.out)
    return EXIT_OK


def _parse_element_list(G: FiniteGroup, path: str) -> list[int]:
    out = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("("):
            if not G.is_permutation_group:
                raise DescriptorError(f"{G.name} is not a permutation group; list element ids")
            try:
                out.append(G.element(line))
            except ValueError as exc:
                raise DescriptorError(str(exc)) from None
        else:
            try:
                x = int(line)
            except ValueError:
                raise DescriptorError(f"bad element {line!r}") from None
            if not 0 <= x < G.order:
                raise DescriptorError(f"element id {x} out of range")
            out.append(x)
    return out


def induced_cycle_check(G: FiniteGroup, cycle: list[int]) -> dict:
    """Consecutive elements Delta-adjacent, all others not."""
    k = len(cycle)
    edges, non_edges = [], []
    for i in range(k):
        for j in range(i + 1, k):
            want = (j - i) in (1, k - 1)
            got = delta_adjacent(G, cycle[i], cycle[j])
            (edges if want else non_edges).append((i, j, got))
    edges_ok = sum(1 for *_, got in edges if got)
    non_edges_ok = sum(1 for *_, got in non_edges if not got)
    induced = (k >= 3 and len(set(cycle)) == k and edges_ok == len(edges)
               and non_edges_ok == len(non_edges))
    return {"length": k, "edges_present": edges_ok, "edges_expected": len(edges),
            "non_edges_absent": non_edges_ok, "non_edges_expected": len(non_edges),
            "induced_cycle": induced}


def cmd_delta_report(args) -> int:
    G = _group(args)
    spectrum = G.order_spectrum()
    alphas = {m: alpha_de_bruijn(m) for m in spectrum}
    omega = delta_clique_number(G)
    doc = {"group": args.group, "group_order": G.order, "spectrum": spectrum,
           "alpha": {str(m): a for m, a in alphas.items()},
           "delta_clique_number": omega, "delta_edgeless": omega == 1}
    status = EXIT_OK

    if args.exact:
        g = build_graph(G, "delta", cap=args.cap)
        cl = clique_number_exact(g, cap=args.clique_cap)
        doc["exact_delta_clique"] = {"value": cl.size, "witness": list(cl.vertices),
                                     "status": "pass" if cl.size == omega else "fail"}
        if cl.size != omega:
            status = EXIT_FAIL

    if args.pentagon or args.elements:
        if args.elements:
            cycle = _parse_element_list(G, args.elements)
        elif G.is_permutation_group and G.degree == 8 and G.order == 40320:
            cycle = [G.element(s) for s in PENTAGON_S8]
        else:
            raise UsageError("--pentagon without --elements is only defined for sym:8")
        check = induced_cycle_check(G, cycle)
        check["elements"] = [G.label(x) for x in cycle]
        doc["cycle"] = check
        if not check["induced_cycle"]:
            doc["verdict"] = "cycle not induced"
            status = EXIT_FAIL
        elif check["length"] % 2 == 1 and omega < 3:
            doc["verdict"] = "not weakly perfect"
        else:
            doc["verdict"] = "inconclusive"

    if args.format == "json":
        _emit(_dump(doc), args.out)
        return status
    lines = [f"group: {args.group} (order {G.order})",
             f"spectrum: {_fmt_set(spectrum)}",
             "alpha: " + " ".join(f"{m}:{a}" for m, a in alphas.items()),
             f"delta clique number: {omega}" + (" (delta is edgeless)" if omega == 1 else "")]
    if "exact_delta_clique" in doc:
        ex = doc["exact_delta_clique"]
        lines.append(f"exact delta clique: {ex['value']} ({ex['status']})")
    if "cycle" in doc:
        c = doc["cycle"]
        lines.append("cycle: " + " ".join(c["elements"]))
        lines.append(f"  edges {c['edges_present']}/{c['edges_expected']} present, "
                     f"non-edges {c['non_edges_absent']}/{c['non_edges_expected']} absent"
                     + (f": induced {c['length']}-cycle confirmed" if c["induced_cycle"] else ""))
        lines.append(f"verdict: {doc['verdict']}")
    _emit("\n".join(lines), args.out)
    return status


def cmd_spectrum(args) -> int:
    G = _group(args)
    spectrum = G.order_spectrum()
    gk = build_gk_graph(G)
    comps = gk.components()
    iso = isolated_large_primes(G, gk)
    doc = {"group": args.group, "group_order": G.order, "spectrum": spectrum,
           "max_element_order": max(spectrum), "gk_primes": list(gk.primes),
           "gk_edges": [list(e) for e in gk.sorted_edges()], "gk_components": comps,
           "gk_component_count": len(comps), "large_primes": large_primes(G),
           "isolated_large_primes": iso}
    if args.format == "json":
        _emit(_dump(doc), args.out)
        return EXIT_OK
    none = "(none)"
    lines = [f"group: {args.group} (order {G.order})",
             f"spectrum: {_fmt_set(spectrum)}",
             f"max element order: {max(spectrum)}",
             f"gk primes: {' '.join(map(str, gk.primes)) or none}",
             f"gk edges: {' '.join(f'{p}-{q}' for p, q in gk.sorted_edges()) or none}",
             f"gk components: {len(comps)}" + ("  " + " ".join(_fmt_set(c) for c in comps) if comps else ""),
             f"isolated large primes: {' '.join(map(str, iso)) or none}"]
    _emit("\n".join(lines), args.out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epgcolour",
        description="Enhanced power graphs of finite groups: colourings and certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_cmd(name, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("group", help="group descriptor, e.g. sym:5, cyclic:12, perm:gens.txt")
        p.add_argument("--group-cap", type=int, default=DEFAULT_GROUP_CAP,
                       help="largest group to enumerate (default %(default)s)")
        p.add_argument("--cap", type=int, default=GRAPH_CAP,
                       help="largest group to build a full graph for (default %(default)s)")
        p.add_argument("--out", help="write output to this file")
        return p

    p = sub.add_parser("families", help="print the colour families A_1..A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check both family properties")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_families)

    p = group_cmd("verify", "certify clique number = chromatic number = max element order")
    p.add_argument("--exact", action="store_true", help="also solve the built graph exactly")
    p.add_argument("--clique-cap", type=int, default=CLIQUE_CAP)
    p.add_argument("--chromatic-cap", type=int, default=CHROMATIC_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-cert", help="re-validate a certificate written by verify")
    p.add_argument("certificate")
    p.add_argument("--group-cap", type=int, default=DEFAULT_GROUP_CAP)
    p.set_defaults(func=cmd_check_cert)

    p = group_cmd("graph", "export the power, enhanced, delta or prime graph")
    p.add_argument("--kind", choices=("power", "enhanced", "delta", "gk"), default="enhanced")
    p.add_argument("--format", choices=("dot", "edges", "json"), default="edges")
    p.set_defaults(func=cmd_graph)

    p = group_cmd("delta-report", "order spectrum, antichain sizes and delta clique number")
    p.add_argument("--pentagon", action="store_true",
                   help="check the five-element induced cycle (sym:8, or --elements)")
    p.add_argument("--elements", help="file listing a cycle of elements, one per line")
    p.add_argument("--exact", action="store_true", help="cross-check on the built delta graph")
    p.add_argument("--clique-cap", type=int, default=CLIQUE_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_delta_report)

    p = group_cmd("spectrum", "order spectrum and prime graph summary")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DescriptorError, InvalidGroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, FactorisationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
