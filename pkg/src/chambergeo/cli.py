"""Command-line front end: subcommand grammar, config parsing, and emission.

Exit codes: 0 success, 1 domain error (machine-readable JSON on stderr),
2 usage error. All output is deterministic for fixed input.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import emit, fixtures, movcone, parabolic, slices
from .arrangement import (Fan, build_arrangement, chambers,
                          is_arrangement_induced, wall_graph)
from .errors import ChamberGeoError, InconsistentInput
from .exactlin import Mat
from .fixtures import arrangement_from_json, fan_from_json, weyl_from_json
from .rootsys import (CartanType, build_root_system, weyl_group,
                      DEFAULT_ORDER_CAP)
from .slices import SlicePoint


def _parse_point(text):
    try:
        return tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise InconsistentInput(f"cannot parse point {text!r}: {e}")


def _parse_levi(text):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InconsistentInput(f"cannot parse levi set {text!r}")


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _root_system(args):
    return build_root_system(CartanType(args.type.upper(), args.rank))


def _reflection_arrangement(rs):
    return build_arrangement(
        [rs.root_functional(b) for b in rs.positive_roots], (), rs.rank)


def _rho(rs):
    """The point with (rho, a_i) = 1 for every simple root: generic ample."""
    ones = tuple(Fraction(1) for _ in range(rs.rank))
    return rs.form.gram.inverse() @ ones


def _arrangement_input(args, parser):
    """Either a reflection arrangement from --type/--rank, or a config file."""
    if args.file:
        doc = _load_json(args.file)
        arr = arrangement_from_json(doc.get("arrangement", doc))
        return doc, arr, None
    if not (args.type and args.rank):
        parser.error("need either --file or both --type and --rank")
    rs = _root_system(args)
    return None, _reflection_arrangement(rs), rs


def _mov_input(args, parser):
    doc, arr, rs = _arrangement_input(args, parser)
    if rs is not None:
        return arr, weyl_group(rs).elements, _rho(rs)
    if doc is None or "weyl" not in doc or "ample_class" not in doc:
        raise InconsistentInput(
            "mov config needs arrangement, weyl, and ample_class")
    return (arr, weyl_from_json(doc["weyl"]),
            tuple(Fraction(x) for x in doc["ample_class"]))


def _chambers_doc(arr):
    chs = chambers(arr)
    wg = wall_graph(arr, chs)
    return chs, wg, {
        "arrangement": arr.to_json(),
        "chambers": [c.to_json() for c in chs],
        "count": len(chs),
        "wall_edges": [list(e) for e in wg.edges],
    }


def _flops_doc(dec):
    return {
        "chambers": [{"index": i, "signs": dec.chambers[i].sign_string()}
                     for i in dec.mov_chambers],
        "edges": [list(e) for e in dec.flop_graph.edges],
        "ample_chamber": dec.ample_chamber,
    }


def _cmd_roots(args, parser):
    return emit.emit_json(_root_system(args).to_json())


def _cmd_weyl(args, parser):
    rs = _root_system(args)
    return emit.emit_json(weyl_group(rs, args.cap).to_json())


def _cmd_chambers(args, parser):
    _, arr, _ = _arrangement_input(args, parser)
    chs, wg, doc = _chambers_doc(arr)
    if args.format == "json":
        return emit.emit_json(doc)
    if args.format == "dot":
        return emit.emit_dot_wall_graph(chs, wg.edges)
    return emit.emit_svg_arrangement(arr, chs)


def _cmd_mov(args, parser):
    arr, weyl, ample = _mov_input(args, parser)
    dec = movcone.mov_decomposition(arr, weyl, ample)
    if args.format == "json":
        return emit.emit_json(dec.to_json())
    return emit.emit_dot_wall_graph(dec.chambers, dec.flop_graph.edges,
                                    graph_name="flops",
                                    nodes=dec.flop_graph.nodes)


def _cmd_flops(args, parser):
    arr, weyl, ample = _mov_input(args, parser)
    dec = movcone.mov_decomposition(arr, weyl, ample)
    if args.format == "json":
        return emit.emit_json(_flops_doc(dec))
    return emit.emit_dot_wall_graph(dec.chambers, dec.flop_graph.edges,
                                    graph_name="flops",
                                    nodes=dec.flop_graph.nodes)


def _cmd_parabolic(args, parser):
    rs = _root_system(args)
    levi_1based = _parse_levi(args.levi)
    I = tuple(i - 1 for i in levi_1based)
    ctx = parabolic.context(rs, I)
    diags = parabolic.parabolics_with_levi(rs, I)
    return emit.emit_json({
        "type": str(rs.cartan_type),
        "levi": list(levi_1based),
        "arrangement": ctx.arrangement.to_json(),
        "diagrams": [d.to_json() for d in diags],
        "count": len(diags),
    })


def _cmd_slice_disc(args, parser):
    p = SlicePoint(_parse_point(args.point))
    singular, pairs, zvals = slices.fiber_is_singular(p)
    from .exactlin import poly_discriminant
    return emit.emit_json({
        "singular": singular,
        "pairs": [list(q) for q in pairs],
        "z_values": [str(z) for z in zvals],
        "discriminant": str(poly_discriminant(p.poly())),
    })


def _cmd_slice_types(args, parser):
    p = SlicePoint(_parse_point(args.point))
    singular, pairs, _ = slices.fiber_is_singular(p)
    return emit.emit_json({
        "singular": singular,
        "pairs": [list(q) for q in pairs],
        "types": list(slices.singularity_types(p)),
    })


def _cmd_slice_rays(args, parser):
    rays = slices.ample_chamber_rays(args.n)
    return emit.emit_json({"n": args.n,
                           "rays": [[int(x) for x in r] for r in rays]})


def _cmd_slice_alpha(args, parser):
    alpha, ok = slices.alpha_map(args.n)
    return emit.emit_json({"n": args.n, "alpha": alpha.to_json(),
                           "gram_check": ok})


def _cmd_fan_check(args, parser):
    fan = fan_from_json(_load_json(args.file).get("fan",
                                                  _load_json(args.file)))
    induced, offending = is_arrangement_induced(fan)
    return emit.emit_json({
        "arrangement_induced": induced,
        "offending": [list(h.normal) for h in offending],
    })


def _cmd_fixtures_list(args, parser):
    return emit.emit_json({"fixtures": list(fixtures.fixture_names())})


def _cmd_fixtures_emit(args, parser):
    doc = fixtures.load_fixture(args.name)
    if args.format == "json":
        return emit.emit_json(doc)
    if "fan" in doc:
        fan = Fan.from_json(doc["fan"])
        if args.format == "svg":
            return emit.emit_svg_fan(fan)
        raise InconsistentInput("dot output is not defined for a fan fixture")
    arr = arrangement_from_json(doc["arrangement"])
    chs = chambers(arr)
    if args.format == "svg":
        return emit.emit_svg_arrangement(arr, chs)
    return emit.emit_dot_wall_graph(chs, wall_graph(arr, chs).edges)


def _add_type_rank(p, required=True):
    p.add_argument("--type", required=required, help="Cartan letter A-G")
    p.add_argument("--rank", type=int, required=required)


def _add_common(p, formats=("json",)):
    p.add_argument("--format", choices=formats, default="json")
    p.add_argument("--out", help="output path (default: stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chambergeo",
        description="chamber geometry of symplectic resolutions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root system data")
    _add_type_rank(p)
    _add_common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("weyl", help="Weyl group as matrices")
    _add_type_rank(p)
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    _add_common(p)
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("chambers", help="chambers of an arrangement")
    _add_type_rank(p, required=False)
    p.add_argument("--file", help="arrangement config JSON")
    _add_common(p, ("json", "dot", "svg"))
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("mov", help="movable-cone decomposition")
    _add_type_rank(p, required=False)
    p.add_argument("--file", help="config JSON with arrangement/weyl/ample_class")
    _add_common(p, ("json", "dot"))
    p.set_defaults(func=_cmd_mov)

    p = sub.add_parser("flops", help="flop graph of the decomposition")
    _add_type_rank(p, required=False)
    p.add_argument("--file", help="config JSON with arrangement/weyl/ample_class")
    _add_common(p, ("json", "dot"))
    p.set_defaults(func=_cmd_flops)

    p = sub.add_parser("parabolic", help="parabolic diagrams for a Levi set")
    _add_type_rank(p)
    p.add_argument("--levi", required=True,
                   help="comma-separated 1-based simple-root indices")
    _add_common(p)
    p.set_defaults(func=_cmd_parabolic)

    p = sub.add_parser("slice", help="A-type slice family")
    ssub = p.add_subparsers(dest="slice_command", required=True)
    q = ssub.add_parser("disc", help="discriminant membership of a point")
    q.add_argument("--point", required=True, help="comma-separated rationals")
    _add_common(q)
    q.set_defaults(func=_cmd_slice_disc)
    q = ssub.add_parser("types", help="fiber singularity types")
    q.add_argument("--point", required=True)
    _add_common(q)
    q.set_defaults(func=_cmd_slice_types)
    q = ssub.add_parser("rays", help="ample-chamber rays")
    q.add_argument("--n", type=int, required=True)
    _add_common(q)
    q.set_defaults(func=_cmd_slice_rays)
    q = ssub.add_parser("alpha", help="the isometry alpha and its Gram check")
    q.add_argument("--n", type=int, required=True)
    _add_common(q)
    q.set_defaults(func=_cmd_slice_alpha)

    p = sub.add_parser("fan", help="fan utilities")
    fsub = p.add_subparsers(dest="fan_command", required=True)
    q = fsub.add_parser("check", help="arrangement-induced test")
    q.add_argument("--file", required=True, help="fan JSON")
    _add_common(q)
    q.set_defaults(func=_cmd_fan_check)

    p = sub.add_parser("fixtures", help="shipped example data")
    xsub = p.add_subparsers(dest="fixtures_command", required=True)
    q = xsub.add_parser("list")
    _add_common(q)
    q.set_defaults(func=_cmd_fixtures_list)
    q = xsub.add_parser("emit")
    q.add_argument("name")
    _add_common(q, ("json", "dot", "svg"))
    q.set_defaults(func=_cmd_fixtures_emit)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args, parser)
    except ChamberGeoError as e:
        sys.stderr.write(emit.emit_json(
            {"error": e.code, "message": str(e), "context": e.context()}))
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
