"""Command-line front end.

Exit codes: 0 = computed, 1 = a checked property failed, 2 = input error.
With --json the output is deterministic: sorted keys, schema version 1.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import complexes, connectivity, fiberprod, formats, serre
from .errors import InputError
from .fields import RATIONALS, parse_field
from .homology import homology_over_Z, reduced_betti
from .lattice import (
    deficiency_support,
    non_s2_top_report,
    ps_connectivity_certificate,
    validate_quadrangle,
)

SCHEMA = 1


def _parse_builtin(spec: str) -> complexes.SimplicialComplex:
    name, _, param = spec.partition(":")
    if param:
        try:
            params: tuple[int, ...] = (int(param),)
        except ValueError:
            raise InputError(f"builtin parameter must be an integer: {spec!r}") from None
    else:
        params = ()
    return complexes.builtin(name, *params)


def _resolve_complex(args) -> complexes.SimplicialComplex:
    if args.builtin is not None:
        return _parse_builtin(args.builtin)
    return formats.load_complex(args.file)


def _face_list(face) -> list[int]:
    return list(face.vertices)


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        sys.stdout.write(formats.dump_json(payload))
    else:
        for line in human_lines:
            print(line)


def _cmd_info(args) -> int:
    cx = _resolve_complex(args)
    fvec = cx.f_vector()
    payload = {
        "command": "info",
        "n_vertices": cx.n_vertices,
        "facets": [list(f.vertices) for f in cx.facets],
        "dim": cx.dim,
        "pure": cx.is_pure,
        "f_vector": {str(d): c for d, c in sorted(fvec.items())},
        "reduced_euler": cx.euler_characteristic_reduced(),
    }
    lines = [
        f"vertices: {cx.n_vertices}",
        f"facets:   {len(cx.facets)}",
        f"dim:      {cx.dim}",
        f"pure:     {cx.is_pure}",
        f"f-vector: {dict(sorted(fvec.items()))}",
        f"reduced Euler characteristic: {cx.euler_characteristic_reduced()}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_homology(args) -> int:
    cx = _resolve_complex(args)
    field = parse_field(args.field)
    betti = reduced_betti(cx, field)
    integral = homology_over_Z(cx)
    payload = {
        "command": "homology",
        "field": str(field),
        "betti": {str(d): b for d, b in betti.dims},
        "integral": {
            str(d): {"rank": rank, "torsion": list(tors)}
            for d, (rank, tors) in integral.items()
        },
    }
    lines = [f"reduced Betti over {field}:"]
    lines += [f"  degree {d}: {b}" for d, b in betti.dims]
    lines.append("integral reduced homology:")
    for d, (rank, tors) in sorted(integral.items()):
        tor = f" + torsion {list(tors)}" if tors else ""
        lines.append(f"  degree {d}: Z^{rank}{tor}")
    _emit(args, payload, lines)
    return 0


def _cmd_serre(args) -> int:
    cx = _resolve_complex(args)
    field = parse_field(args.field)
    if args.r is not None:
        report = serre.check_Sr(cx, args.r, field)
        payload = {
            "command": "serre",
            "field": str(field),
            "r": args.r,
            "holds": report.holds,
            "witness": None if report.witness is None else {
                "face": _face_list(report.witness[0]),
                "degree": report.witness[1],
            },
        }
        if report.holds:
            _emit(args, payload, [f"S_{args.r} holds"])
            return 0
        face, degree = report.witness
        _emit(args, payload, [
            f"S_{args.r} fails: witness face {list(face.vertices)}, homology degree {degree}",
        ])
        return 1
    level = serre.max_Sr(cx, field)
    payload = {
        "command": "serre",
        "field": str(field),
        "cohen_macaulay": level.cohen_macaulay,
        "max_r": level.r_max,
    }
    if level.cohen_macaulay:
        _emit(args, payload, ["Cohen-Macaulay: S_r holds for every r"])
    else:
        _emit(args, payload, [f"max r with S_r: {level.r_max}"])
    return 0


def _cmd_hochster(args) -> int:
    cx = _resolve_complex(args)
    field = parse_field(args.field)
    table = serre.hochster_table(cx, field)
    payload = {
        "command": "hochster",
        "field": str(field),
        "dim": table.complex_dim,
        "entries": [
            {"i": i, "face": _face_list(g), "dim_contribution": h}
            for i, g, h in table.entries
        ],
        "degree0": {str(i): table.degree0(i) for i in range(table.complex_dim + 2)},
        "rows_nonzero": list(table.rows_nonzero),
    }
    lines = [f"local cohomology table over {field} (rows 0..{table.complex_dim + 1}):"]
    for i in range(table.complex_dim + 2):
        row = table.row(i)
        if not row:
            lines.append(f"  H^{i}: 0")
            continue
        parts = ", ".join(f"{list(g.vertices)}:{h}" for g, h in sorted(
            row.items(), key=lambda t: (len(t[0]), t[0].vertices)))
        lines.append(f"  H^{i}: degree-0 dim {table.degree0(i)}; face entries {parts}")
    _emit(args, payload, lines)
    return 0


def _cmd_depth(args) -> int:
    cx = _resolve_complex(args)
    field = parse_field(args.field)
    d = serre.depth(cx, field)
    cm = serre.is_CM_reisner(cx, field)
    payload = {
        "command": "depth",
        "field": str(field),
        "depth": d,
        "krull_dim": cx.dim + 1,
        "cohen_macaulay": cm,
    }
    _emit(args, payload, [f"depth {d}, Krull dim {cx.dim + 1}, Cohen-Macaulay: {cm}"])
    return 0


def _partition_payload(partition) -> dict:
    return {
        "blocks": [list(b) for b in partition.blocks],
        "adjacency": [
            {"i": i, "j": j, "intersection_dim": d} for i, j, d in partition.adjacency
        ],
        "space_dim": partition.space_dim,
        "equidimensional": partition.equidimensional,
    }


def _cmd_codim1(args) -> int:
    cx = _resolve_complex(args)
    partition = connectivity.complex_codim1(cx)
    payload = {"command": "codim1", "n_blocks": partition.n_blocks,
               **_partition_payload(partition)}
    lines = [f"codim-1 blocks: {partition.n_blocks}"]
    for b, block in enumerate(partition.blocks):
        faces = [list(cx.facets[i].vertices) for i in block]
        lines.append(f"  block {b}: facets {faces}")
    _emit(args, payload, lines)
    return 0


def _cmd_summands(args) -> int:
    cx = _resolve_complex(args)
    field = parse_field(args.field)
    report = connectivity.summand_report(cx, field)
    payload = {
        "command": "summands",
        "field": str(field),
        "r": report.r,
        "blocks": [[list(f.vertices) for f in block] for block in report.blocks],
        "degree0_check": report.degree0_check,
    }
    lines = [f"predicted indecomposable summands of the canonical module: r = {report.r}",
             f"degree-0 cross-check (top homology of the top part): {report.degree0_check}"]
    for b, block in enumerate(report.blocks):
        lines.append(f"  block {b}: facets {[list(f.vertices) for f in block]}")
    _emit(args, payload, lines)
    return 0


def _cmd_hh_report(args) -> int:
    cx = _resolve_complex(args)
    field = parse_field(args.field)
    report = connectivity.hochster_huneke_report(cx, field)
    payload = {
        "command": "hh-report",
        "field": str(field),
        "r": report.r,
        "connected_in_codim1": report.connected_in_codim1,
        "canonical_module_indecomposable": report.canonical_module_indecomposable,
        "s2ification_connected": report.s2ification_connected,
        "equidimensional": report.equidimensional,
    }
    lines = [
        f"codim-1 components of the top part: {report.r}",
        f"connected in codimension 1:         {report.connected_in_codim1}",
        f"canonical module indecomposable:    {report.canonical_module_indecomposable}",
        f"S_2-ification connected:            {report.s2ification_connected}",
        f"equidimensional:                    {report.equidimensional}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_lattice_quad(args) -> int:
    quad = formats.quadrangle_from_json_dict(formats.load_json(args.file))
    validation = validate_quadrangle(quad)
    if not validation.ok:
        payload = {
            "command": "lattice-quad",
            "ok": False,
            "issues": [
                {"kind": v.kind, "positions": list(v.positions), "variables": list(v.variables)}
                for v in validation.issues
            ],
        }
        lines = ["quadrangle validation failed:"]
        for v in validation.issues:
            lines.append(f"  {v.kind} at positions {list(v.positions)}"
                         + (f", variables {list(v.variables)}" if v.variables else ""))
        _emit(args, payload, lines)
        return 1
    support = deficiency_support(quad)
    report = non_s2_top_report(quad)
    payload = {
        "command": "lattice-quad",
        "ok": True,
        "dim_A": report.dim_A,
        "non_s2_dim": report.non_s2_dim,
        "connected_in_codim1": report.connected,
        "positively_graded": report.positively_graded,
        "minimal_primes": [list(p.vars) for p in support.primes],
        "partition": _partition_payload(report.partition),
    }
    lines = [
        f"dim A = {report.dim_A}; top non-S_2 locus dimension = {report.non_s2_dim}",
        f"minimal primes of the deficiency support: {len(support.primes)} (height 4 each)",
        f"connected in codimension 1: {report.connected}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_lattice_ps(args) -> int:
    incidence = formats.incidence_from_json_dict(formats.load_json(args.file))
    cert = ps_connectivity_certificate(incidence)
    payload = {
        "command": "lattice-ps",
        "ok": cert.ok,
        "n_quadrangles": cert.n_quadrangles,
        "n_triangles": cert.n_triangles,
        "spanning_tree": [[i, t] for i, t in cert.spanning_tree],
        "violation": None if cert.violation is None else
        {"quadrangle": cert.violation[0], "reason": cert.violation[1]},
    }
    if cert.ok:
        _emit(args, payload, [
            f"connected: {cert.n_quadrangles} quadrangles, {cert.n_triangles} triangles",
            f"spanning tree edges: {[[i, t] for i, t in cert.spanning_tree]}",
        ])
        return 0
    _emit(args, payload, [
        f"violation at quadrangle {cert.violation[0]}: {cert.violation[1]}",
    ])
    return 1


def _cmd_fiberprod(args) -> int:
    k = args.k
    tables = {
        "R": fiberprod.table_R,
        "B": fiberprod.table_B,
        "C": fiberprod.table_C,
        "A": fiberprod.table_A,
    }
    rings = [args.ring] if args.ring else ["R", "B", "C", "A"]
    profiles = {}
    for ring in rings:
        try:
            profiles[ring] = tables[ring](k)
        except InputError as exc:
            raise InputError(f"ring {ring}: {exc}") from None
    payload: dict = {"command": "fiberprod", "k": k,
                     "tables": {r: p.to_json() for r, p in profiles.items()}}
    lines = []
    for ring in rings:
        lines.append(f"H^i of {ring}_{k}:")
        for d, v in profiles[ring].rows:
            lines.append(f"  i={d}: {v.to_json()}")
    exit_code = 0
    if args.verify_les:
        report = fiberprod.verify_les(k)
        payload["les_consistent"] = report.ok
        lines.append(f"long exact sequence consistency: {'pass' if report.ok else 'FAIL'}")
        if not report.ok:
            for w in report.failures:
                lines.append(f"  inconsistent window at degrees {list(w.degrees)}")
            payload["les_failures"] = [
                {"degrees": list(w.degrees), "finite_sum": w.finite_sum}
                for w in report.failures
            ]
            exit_code = 1
    _emit(args, payload, lines)
    return exit_code


def _cmd_corpus(args) -> int:
    entries = complexes.corpus()
    payload = {
        "command": "corpus",
        "entries": [
            {
                "name": name,
                "n_vertices": cx.n_vertices,
                "n_facets": len(cx.facets),
                "dim": cx.dim,
                "pure": cx.is_pure,
            }
            for name, cx in entries
        ],
    }
    lines = ["builtin corpus:"]
    for name, cx in entries:
        lines.append(f"  {name}: {cx.n_vertices} vertices, {len(cx.facets)} facets, dim {cx.dim}")
    lines.append("parametrized builtins: boundary_simplex:<n>, cycle:<m>, sphere_product:<k>")
    _emit(args, payload, lines)
    return 0


def _add_complex_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", help="builtin name, e.g. torus_7 or cycle:5")
    group.add_argument("--file", help="path to a complex file (text or JSON)")


def _add_field(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", default="q", help="coefficient field: q or f:<p>")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codimone",
        description="Serre conditions, local cohomology tables, and "
                    "codimension-1 connectedness for face rings and monomial data.",
    )
    parser.add_argument("--json", action="store_true", help="structured output, stable key order")
    sub = parser.add_subparsers(dest="command", required=True)

    for verb, fn, needs_complex, needs_field in (
        ("info", _cmd_info, True, False),
        ("homology", _cmd_homology, True, True),
        ("serre", _cmd_serre, True, True),
        ("hochster", _cmd_hochster, True, True),
        ("depth", _cmd_depth, True, True),
        ("codim1", _cmd_codim1, True, False),
        ("summands", _cmd_summands, True, True),
        ("hh-report", _cmd_hh_report, True, True),
    ):
        p = sub.add_parser(verb)
        _add_complex_source(p)
        if needs_field:
            _add_field(p)
        if verb == "serre":
            p.add_argument("--r", type=int, default=None, help="check S_r; omit for the maximum")
        p.set_defaults(fn=fn)

    p = sub.add_parser("lattice-quad")
    p.add_argument("--file", required=True, help="quadrangle JSON file")
    p.set_defaults(fn=_cmd_lattice_quad)

    p = sub.add_parser("lattice-ps")
    p.add_argument("--file", required=True, help="incidence JSON file")
    p.set_defaults(fn=_cmd_lattice_ps)

    p = sub.add_parser("fiberprod")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ring", choices=["R", "B", "C", "A"], default=None)
    p.add_argument("--verify-les", action="store_true")
    p.set_defaults(fn=_cmd_fiberprod)

    p = sub.add_parser("corpus")
    p.set_defaults(fn=_cmd_corpus)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
