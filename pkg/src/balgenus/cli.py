"""Command-line interface.

Every FILE argument accepts ``-`` for standard input, and ``generate`` and
``connsum`` write the JSON complex format, so commands can be piped.

Exit codes: 0 success, 1 an internal cross-check or bound check failed,
2 invalid input or usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .complex import validate
from .constructors import connected_sum, octahedral_sphere, random_connected_sum
from .dual import dual_graph, export_dot, is_bipartite, pair_cycle_counts
from .edgepath import rank_bounds
from .errors import BadArity, BadColors, CrossCheckError, InvalidInput
from .flags import flag_f, flag_h, flag_vectors, gamma, mask_colors
from .genus import balanced_genus, verify_bounds
from .io import dumps, load
from .rank_selected import (
    almost_induced_scan,
    is_theta_shape,
    join_decomposition,
    restrict,
    strongly_connected,
)
from .report import (
    bounds_dict,
    build_report,
    flags_dict,
    genus_dict,
    header,
    report_text,
    set_key,
)


def parse_colors(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise BadColors(f"cannot parse color set {text!r}") from None
    if len(set(out)) != len(out):
        raise BadColors(f"color set {text!r} repeats a color")
    return out


def parse_pair(text: str) -> tuple[int, int]:
    out = parse_colors(text)
    if len(out) != 2:
        raise BadArity(f"expected two colors p,q, got {text!r}")
    return out


def emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def table(rows: list[list], header_row: list[str]) -> str:
    cells = [header_row] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header_row))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines)


def fmt(x: Fraction | None) -> str:
    if x is None:
        return "-"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- subcommands ---------------------------------------------------------


def cmd_validate(args) -> int:
    cx = load(args.file)
    rep = validate(cx)
    if args.json:
        emit_json({**header(cx, "validate"), "validation": rep.as_dict()})
    else:
        print(f"dimension {cx.dim}, {cx.num_vertices} vertices, {len(cx.facets)} facets")
        for name, val in rep.as_dict().items():
            if name == "witnesses":
                continue
            print(f"{name:>26}: {'yes' if val else 'NO'}")
        for name, faces in sorted(rep.witnesses.items()):
            shown = ", ".join("{" + ",".join(f) + "}" for f in faces[:5])
            print(f"witness {name}: {shown}")
    if not rep.normal_pseudomanifold:
        print("error: not a normal pseudomanifold: " + ", ".join(rep.failures()), file=sys.stderr)
        return 2
    return 0


def cmd_flags(args) -> int:
    cx = load(args.file)
    if args.set is not None:
        colors = parse_colors(args.set)
        sel = {
            "colors": list(colors),
            "flag_f": flag_f(cx, colors),
            "flag_h": flag_h(cx, colors),
            "gamma": gamma(cx, colors) if len(colors) == 2 else None,
        }
        if args.json:
            emit_json({**header(cx, "flags"), "selection": sel})
        else:
            print(f"S = {{{set_key(colors)}}}")
            print(f"f_S = {sel['flag_f']}")
            print(f"h_S = {sel['flag_h']}")
            if sel["gamma"] is not None:
                print(f"Gamma_S = {sel['gamma']}")
        return 0
    if args.json:
        emit_json({**header(cx, "flags"), "flags": flags_dict(cx)})
        return 0
    fv = flag_vectors(cx)
    print(table([list(fv.f)], [f"f_{i}" for i in range(-1, cx.dim + 1)]))
    print()
    print(table([list(fv.h)], [f"h_{i}" for i in range(cx.dim + 2)]))
    print(f"\neuler characteristic: {fv.euler}\n")
    rows = []
    for m in sorted(fv.flag_f, key=lambda m: (bin(m).count("1"), mask_colors(m))):
        cols = mask_colors(m)
        g = gamma(cx, cols) if len(cols) == 2 else "-"
        rows.append(["{" + set_key(cols) + "}", fv.flag_f[m], fv.flag_h[m], g])
    print(table(rows, ["S", "f_S", "h_S", "Gamma_S"]))
    return 0


def cmd_structure(args) -> int:
    cx = load(args.file)
    pair = parse_pair(args.set)
    rs = restrict(cx, pair)
    g = gamma(cx, pair)
    scan = almost_induced_scan(cx, pair)
    doc = {
        "colors": list(pair),
        "gamma": g,
        "degree_sequence": list(rs.degree_sequence()),
        "strongly_connected": strongly_connected(cx, pair),
        "almost_induced_cycles": scan,
        "theta_shape": is_theta_shape(cx, pair) if g == 1 else None,
        "join_certificate": join_decomposition(cx, pair) is not None if g == 0 else None,
    }
    if args.json:
        emit_json({**header(cx, "structure"), "structure": doc})
        return 0
    print(f"S = {{{set_key(pair)}}}: {len(rs.parent_ids)} vertices, {len(rs.complex.facets)} edges")
    print(f"Gamma_S = {g}")
    print("degree sequence: " + " ".join(map(str, doc["degree_sequence"])))
    print(f"strongly connected: {'yes' if doc['strongly_connected'] else 'no'}")
    if scan:
        for cyc in scan:
            print("almost-induced cycle: " + " ".join(cyc))
    else:
        print("almost-induced cycles: none")
    if doc["theta_shape"] is not None:
        print(f"theta shape: {'yes' if doc['theta_shape'] else 'no'}")
    if doc["join_certificate"] is not None:
        verdict = "certified" if doc["join_certificate"] else "refuted"
        print(f"join of Delta_[d]-S and the cycle Delta_S: {verdict}")
    return 0


def cmd_dual(args) -> int:
    cx = load(args.file)
    graph = dual_graph(cx)
    pair = parse_pair(args.pair) if args.pair is not None else None
    if pair is not None and not set(pair) <= set(graph.colors):
        raise BadColors(f"colors {pair} not among {graph.colors}")
    counts = pair_cycle_counts(graph)
    if args.dot is not None:
        text = export_dot(graph, pair)
        if args.dot == "-":
            sys.stdout.write(text)
            return 0
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    doc = {
        "nodes": graph.num_nodes,
        "edges": graph.num_edges,
        "regular": graph.is_regular(),
        "bipartite": is_bipartite(graph),
        "cycle_counts": {set_key(sorted(k)): v for k, v in sorted(counts.items(), key=lambda kv: sorted(kv[0]))},
    }
    if args.json:
        emit_json({**header(cx, "dual"), "dual": doc})
        return 0
    print(f"dual graph: {doc['nodes']} nodes, {doc['edges']} edges")
    print(f"{cx.dim + 1}-regular: {'yes' if doc['regular'] else 'no'}")
    print(f"bipartite (orientable): {'yes' if doc['bipartite'] else 'no'}")
    rows = [["{" + k + "}", v] for k, v in doc["cycle_counts"].items()]
    if pair is not None:
        rows = [r for r in rows if r[0] == "{" + set_key(sorted(pair)) + "}"]
    print(table(rows, ["pair", "bicolored cycles"]))
    return 0


def cmd_genus(args) -> int:
    cx = load(args.file)
    record = balanced_genus(cx)
    if args.json:
        emit_json({**header(cx, "genus"), "genus": genus_dict(record)})
        return 0
    if args.all:
        head = ["necklace", "chi(F)", "rho_euler", "rho_flag", "rho_closed"]
        rows = [
            [str(r.necklace), r.euler_char, fmt(r.rho_euler), fmt(r.rho_flag), fmt(r.rho_closed)]
            for r in record.rows
        ]
    else:
        head = ["necklace", "chi(F)", "rho"]
        rows = [[str(r.necklace), r.euler_char, fmt(r.rho)] for r in record.rows]
    print(table(rows, head))
    print()
    print(f"balanced genus: {fmt(record.genus)}")
    print(f"orientable: {'yes' if record.orientable else 'no'}")
    print(f"attained by {len(record.argmin)} of {len(record.rows)} necklaces")
    for note in record.notes:
        print(f"note: {note}")
    return 0


def cmd_verify(args) -> int:
    cx = load(args.file)
    rep = verify_bounds(cx, asserted_m=args.m)
    if args.json:
        emit_json({**header(cx, "verify"), "bounds": bounds_dict(rep)})
    else:
        print(f"balanced genus {fmt(rep.genus)}, euler characteristic {rep.euler_char}")
        for c in rep.certificates:
            print(f"certificate: {c}")
        for c in rep.checks:
            print(f"[{c.status:>4}] {c.name}: {c.statement}")
        print("all checks passed" if rep.ok else "some checks FAILED")
    return 0 if rep.ok else 1


def cmd_pi1(args) -> int:
    cx = load(args.file)
    colors = parse_pair(args.set) if args.set is not None else None
    rb = rank_bounds(cx, colors, max_passes=args.passes, seed=args.seed)
    if args.json:
        emit_json({**header(cx, "pi1"), "pi1": rb.as_dict()})
        return 0
    print(f"generators (non-tree edges): {rb.generators}")
    print(f"relations: {rb.relations} ({rb.triangles} triangles)")
    print(f"trivialized via vertex links: {rb.link_trivialized}")
    print(f"surviving after {rb.passes} propagation passes: {rb.surviving}")
    if rb.s_generators is not None:
        print(f"surviving Delta_S generators: {rb.s_generators}")
    tors = " x ".join(f"Z/{t}" for t in rb.torsion)
    print(f"H_1 = Z^{rb.betti}" + (f" x {tors}" if tors else ""))
    print(f"rank bounds: {rb.lower} <= m <= {rb.upper}")
    if rb.simply_connected_witness is not None:
        print(f"simply connected: Delta_S lies in lk({rb.simply_connected_witness})")
    for note in rb.notes:
        print(f"note: {note}")
    return 0


def cmd_generate(args) -> int:
    if args.kind == "octahedral":
        cx = octahedral_sphere(args.dim)
    else:
        if args.summands < 1:
            raise InvalidInput("--summands must be at least 1")
        cx = random_connected_sum(args.dim, args.summands, random.Random(args.seed))
    print(dumps(cx))
    return 0


def cmd_connsum(args) -> int:
    if len(args.facet) != 2:
        raise InvalidInput("connsum needs exactly two --facet indices")
    a, b = load(args.a), load(args.b)
    print(dumps(connected_sum(a, args.facet[0], b, args.facet[1])))
    return 0


def cmd_report(args) -> int:
    cx = load(args.file)
    rep = build_report(cx, asserted_m=args.m)
    if args.json:
        emit_json(rep)
    else:
        sys.stdout.write(report_text(rep))
    return {"ok": 0, "bound-failed": 1, "cross-check-failed": 1}[rep["status"]]


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="balgenus",
        description="Balanced genus and edge-colored dual graphs of balanced complexes.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, help_text, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="complex JSON file, or - for stdin")
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = with_file("validate", "check the balanced normal pseudomanifold conditions")
    p.set_defaults(func=cmd_validate)

    p = with_file("flags", "f-, h- and flag vectors")
    p.add_argument("--set", help="comma-separated color set S")
    p.set_defaults(func=cmd_flags)

    p = with_file("structure", "rank-selected graph Delta_S for a color pair")
    p.add_argument("--set", required=True, help="color pair p,q")
    p.set_defaults(func=cmd_structure)

    p = with_file("dual", "dual graph and bicolored cycles")
    p.add_argument("--dot", help="write Graphviz DOT to this path (- for stdout)")
    p.add_argument("--pair", help="restrict DOT and table to colors i,j")
    p.set_defaults(func=cmd_dual)

    p = with_file("genus", "necklace table and balanced genus")
    p.add_argument("--all", action="store_true", help="show every evaluation of rho")
    p.set_defaults(func=cmd_genus)

    p = with_file("verify", "genus lower bounds and sphere criteria")
    p.add_argument("--m", type=int, help="asserted rank of the fundamental group")
    p.set_defaults(func=cmd_verify)

    p = with_file("pi1", "bounds on the rank of the fundamental group")
    p.add_argument("--set", help="color pair p,q; grow the tree inside Delta_S first")
    p.add_argument("--seed", type=int, default=None, help="randomize the spanning tree")
    p.add_argument("--passes", type=int, default=10, help="triangle propagation passes")
    p.set_defaults(func=cmd_pi1)

    p = with_file("report", "run the full pipeline")
    p.add_argument("--m", type=int, help="asserted rank of the fundamental group")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("generate", help="write a complex in JSON")
    p.add_argument("kind", choices=["octahedral", "random-sum"])
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--summands", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("connsum", help="balanced connected sum A # B")
    p.add_argument("a", help="first complex (JSON, or -)")
    p.add_argument("b", help="second complex (JSON, or -)")
    p.add_argument("--facet", type=int, action="append", default=[],
                   help="facet index; give once for A and once for B")
    p.set_defaults(func=cmd_connsum)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CrossCheckError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except InvalidInput as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
