"""Command line front end.  Documents are JSON; see ``polygroup.documents``.

Exit status: 0 success, 1 domain error (or "unequal", or a failed verify run),
2 usage error (bad arguments or malformed documents).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import verify as verify_mod
from .basis_decomp import Decomposition, decompose, reassemble
from .documents import (
    DocumentError,
    dumps,
    emit_element,
    emit_number,
    emit_polytope,
    is_element_doc,
    loads,
    parse_element,
    parse_polytope,
)
from .exact_geometry import PolytopeError, as_point
from .group import eq, face_euler_characteristic, involution, seminorm, translation_split, width
from .norm_witness import witness_antisymmetric, witness_antisymmetric_pt, witness_same_norm
from .polytope_ops import (
    Hyperplane,
    classify_codim1_face,
    compress,
    cut,
    face_in_direction,
    height,
    is_almost_pillar,
    is_flat,
    is_grounded,
    is_pillar,
    minkowski_sum,
    reflect,
    shadow,
    upper_height,
    upper_shadow,
    vertical_glue,
    vertical_stretch,
)

COORD_BOUND_ENV = "POLYGROUP_COORD_BOUND"


class UsageError(Exception):
    pass


def _label(path: str) -> str:
    return "<stdin>" if path == "-" else path


def _read(path: str) -> object:
    if path == "-":
        return loads(sys.stdin.read(), "<stdin>")
    p = Path(path)
    if not p.exists():
        raise UsageError(f"{path}: no such file")
    return loads(p.read_text(encoding="utf-8"), path)


def _vector(text: str) -> tuple:
    try:
        return as_point(json.loads("[" + text + "]") if "/" not in text else [s.strip() for s in text.split(",")])
    except (ValueError, json.JSONDecodeError):
        raise UsageError(f"malformed vector {text!r}") from None


def _number(text: str):
    try:
        return as_point([text.strip()])[0]
    except ValueError:
        raise UsageError(f"malformed number {text!r}") from None


def _out(doc) -> None:
    print(doc if isinstance(doc, str) else dumps(doc))


# ------------------------------------------------------------------ commands


def cmd_hull(a):
    doc = _read(a.file)
    _out(emit_polytope(parse_polytope(doc, _label(a.file)), doc.get("name") if isinstance(doc, dict) else None))


def cmd_sum(a):
    docs = [_read(f) for f in a.files]
    if any(is_element_doc(d) for d in docs):
        xs = [parse_element(d, f) for d, f in zip(docs, map(_label, a.files))]
        acc = xs[0]
        for x in xs[1:]:
            acc = acc + x
        _out(emit_element(acc))
        return
    polys = [parse_polytope(d, f) for d, f in zip(docs, map(_label, a.files))]
    acc = polys[0]
    for P in polys[1:]:
        acc = minkowski_sum(acc, P)
    _out(emit_polytope(acc))


def cmd_reflect(a):
    doc = _read(a.file)
    if is_element_doc(doc):
        _out(emit_element(involution(parse_element(doc, _label(a.file)))))
    else:
        _out(emit_polytope(reflect(parse_polytope(doc, _label(a.file)))))


def cmd_faces(a):
    P = parse_polytope(_read(a.file), _label(a.file))
    out = []
    for f in P.faces:
        item = {"dim": f.dim, "witness": list(f.witness_direction), "vertices": emit_polytope(f.polytope)["vertices"]}
        if P.dim == P.ambient_dim and f.dim == P.dim - 1:
            item["kind"] = classify_codim1_face(P, f)
        out.append(item)
    _out(out)


def cmd_face(a):
    P = parse_polytope(_read(a.file), _label(a.file))
    _out(emit_polytope(face_in_direction(P, _vector(a.dir))))


def cmd_shadow(a):
    _out(emit_polytope(shadow(parse_polytope(_read(a.file), _label(a.file)))))


def cmd_upper_shadow(a):
    _out(emit_polytope(upper_shadow(parse_polytope(_read(a.file), _label(a.file)))))


def cmd_cut(a):
    P = parse_polytope(_read(a.file), _label(a.file))
    c = cut(P, Hyperplane.make(_vector(a.normal), _number(a.offset)))

    def em(Q):
        return None if Q is None else emit_polytope(Q)

    _out({"upper": em(c.upper), "lower": em(c.lower), "section": em(c.section)})


def cmd_stretch(a):
    P = parse_polytope(_read(a.file), _label(a.file))
    res = vertical_stretch(P, int(a.height))
    _out({"k": emit_number(res.k), "stretched": emit_polytope(res.stretched)})


def cmd_glue(a):
    P = parse_polytope(_read(a.upper), _label(a.upper))
    Q = parse_polytope(_read(a.lower), _label(a.lower))
    _out(emit_polytope(vertical_glue(P, Q, Hyperplane.flat(P.ambient_dim, _number(a.height)))))


def cmd_euler(a):
    _out(emit_element(face_euler_characteristic(parse_polytope(_read(a.file), _label(a.file)))))


def cmd_eq(a):
    q = True if a.quotient else None
    x = parse_element(_read(a.x), _label(a.x), q)
    y = parse_element(_read(a.y), _label(a.y), q)
    if x.quotient != y.quotient:
        x, y = x.to_quotient(), y.to_quotient()
    same = eq(x, y)
    print("equal" if same else "unequal")
    return 0 if same else 1


def cmd_norm(a):
    doc = _read(a.file)
    phi = _vector(a.phi)
    if is_element_doc(doc):
        val = seminorm(parse_element(doc, _label(a.file)), phi)
    else:
        P = parse_polytope(doc, _label(a.file))
        if len(phi) != P.ambient_dim:
            raise PolytopeError("functional has wrong length")
        val = width(P, phi)
    print(emit_number(val))


def cmd_decompose(a):
    x = parse_element(_read(a.file), _label(a.file), True if a.quotient else None)
    if x.quotient:
        d = decompose(x)
        _out(d.to_json() if a.json else str(d))
        return
    v, rest = translation_split(x)
    d = decompose(rest.to_quotient())
    if a.json:
        _out({"translation": [emit_number(c) for c in v], **d.to_json()})
    else:
        print("(" + ",".join(str(emit_number(c)) for c in v) + ") + " + str(d))


def cmd_reassemble(a):
    doc = _read(a.file)
    try:
        d = Decomposition.from_json(doc)
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"{a.file}: malformed decomposition document ({exc})") from None
    _out(emit_element(reassemble(d)))


def cmd_witness(a):
    x = parse_element(_read(a.file), _label(a.file), True if a.quotient else None)
    res = witness_antisymmetric_pt(x) if x.quotient else witness_antisymmetric(x)
    _out({"witness": emit_element(res.witness), "verified": res.check()})


def cmd_witness_r(a):
    P = parse_polytope(_read(a.p), _label(a.p))
    Q = parse_polytope(_read(a.q), _label(a.q))
    _out(emit_polytope(witness_same_norm(P, Q)))


def cmd_classify(a):
    P = parse_polytope(_read(a.file), _label(a.file))
    info = {
        "ambient_dim": P.ambient_dim,
        "dim": P.dim,
        "vertices": len(P.vertices),
        "integral": P.is_integral,
        "flat": is_flat(P),
        "height": emit_number(height(P)),
        "upper_height": emit_number(upper_height(P)),
        "symmetric": P == reflect(P),
    }
    if P.dim == P.ambient_dim:
        pillar = is_pillar(P)
        info.update(
            grounded=is_grounded(P),
            almost_pillar=is_almost_pillar(P),
            pillar=None if pillar is None else {"base": emit_polytope(pillar[0]), "k": emit_number(pillar[1])},
            stretched_at_0=cut(P, Hyperplane.flat(P.ambient_dim, 0)).section == compress(P, 0),
        )
    _out(info)


def _svg(polys, size: int = 320) -> str:
    pts = [v for P in polys for v in P.vertices]
    xs = [float(v[0]) for v in pts]
    ys = [float(v[1]) for v in pts]
    lo_x, hi_x, lo_y, hi_y = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    s = size / max(hi_x - lo_x, hi_y - lo_y)

    def tr(v):
        return f"{(float(v[0]) - lo_x) * s:.2f},{(hi_y - float(v[1])) * s:.2f}"

    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]
    body = []
    for gx in range(int(lo_x), int(hi_x) + 1):
        for gy in range(int(lo_y), int(hi_y) + 1):
            body.append(f'<circle cx="{(gx - lo_x) * s:.2f}" cy="{(hi_y - gy) * s:.2f}" r="1.5" fill="#bbb"/>')
    for i, P in enumerate(polys):
        c = colors[i % len(colors)]
        ring = _ring(P)
        if len(ring) >= 3:
            body.append(
                f'<polygon points="{" ".join(tr(v) for v in ring)}" fill="{c}" fill-opacity="0.25" stroke="{c}" stroke-width="2"/>'
            )
        elif len(ring) == 2:
            body.append(f'<polyline points="{tr(ring[0])} {tr(ring[1])}" stroke="{c}" stroke-width="2"/>')
        for v in ring:
            x, y = tr(v).split(",")
            body.append(f'<circle cx="{x}" cy="{y}" r="3" fill="{c}"/>')
    w = (hi_x - lo_x) * s
    h = (hi_y - lo_y) * s
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}" viewBox="0 0 {w:.2f} {h:.2f}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )


def _ring(P):
    """Vertices of a polygon in boundary order (segments and points pass through)."""
    if P.dim < 2:
        return list(P.vertices)
    nbr: dict = {i: [] for i in range(len(P.vertices))}
    for f in P.facets:
        i, j = sorted(f.vertices)
        nbr[i].append(j)
        nbr[j].append(i)
    order, prev, cur = [0], None, 0
    while True:
        nxt = next(j for j in nbr[cur] if j != prev)
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return [P.vertices[i] for i in order]


def cmd_plot2d(a):
    polys = [parse_polytope(_read(f), _label(f)) for f in a.files]
    if any(P.ambient_dim != 2 for P in polys):
        raise PolytopeError("plot2d draws polytopes in the plane only")
    svg = _svg(polys)
    if a.output:
        Path(a.output).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)


def cmd_verify(a):
    bound = a.coord_bound
    if bound is None:
        bound = int(os.environ.get(COORD_BOUND_ENV, verify_mod.DEFAULT_BOUND))
    names = list(verify_mod.SUITES) if a.suite == "all" else [a.suite]
    if a.suite != "all" and a.suite not in verify_mod.SUITES:
        raise UsageError(f"unknown suite {a.suite!r}; choose from {', '.join(verify_mod.SUITES)}, all")
    reports = []
    for name in names:
        r = verify_mod.run_suite(name, a.trials, a.seed, a.dim, bound, a.parallel, a.index)
        reports.append(r)
        line = r.to_json()
        if not a.timing:
            line.pop("wall_time")
        _out(line)
    bad = [r for r in reports if not r.ok]
    for r in bad:
        print(f"counterexample in {r.suite}; replay with: {r.counterexample['replay']}", file=sys.stderr)
    return 1 if bad else 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polygroup", description="Exact polytope group computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def one(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", nargs="?", default="-")
        sp.set_defaults(fn=fn)
        return sp

    one("hull", cmd_hull, "canonical extreme-point form")
    sp = sub.add_parser("sum", help="Minkowski sum or group sum")
    sp.add_argument("files", nargs="+")
    sp.set_defaults(fn=cmd_sum)
    one("reflect", cmd_reflect, "the involution *")
    one("faces", cmd_faces, "face lattice")
    one("face", cmd_face, "face in a direction").add_argument("--dir", required=True)
    one("shadow", cmd_shadow, "shadow")
    one("upper-shadow", cmd_upper_shadow, "upper shadow")
    sp = one("cut", cmd_cut, "cut along a hyperplane")
    sp.add_argument("--normal", required=True)
    sp.add_argument("--offset", required=True)
    one("stretch", cmd_stretch, "vertical stretching").add_argument("--height", type=int, default=0)
    sp = sub.add_parser("glue", help="vertical gluing of an upper and a lower half")
    sp.add_argument("upper")
    sp.add_argument("lower")
    sp.add_argument("--height", default="0")
    sp.set_defaults(fn=cmd_glue)
    one("euler", cmd_euler, "face Euler characteristic")
    sp = sub.add_parser("eq", help="group equality; prints equal/unequal")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("--quotient", action="store_true")
    sp.set_defaults(fn=cmd_eq)
    one("norm", cmd_norm, "seminorm of a functional").add_argument("--phi", required=True)
    sp = one("decompose", cmd_decompose, "coordinates in the shadow basis")
    sp.add_argument("--quotient", action="store_true")
    sp.add_argument("--json", action="store_true")
    one("reassemble", cmd_reassemble, "collapse a decomposition document")
    one("witness", cmd_witness, "T with T - *T = x").add_argument("--quotient", action="store_true")
    sp = sub.add_parser("witness-r", help="R with P + *R = Q + R")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.set_defaults(fn=cmd_witness_r)
    one("classify", cmd_classify, "predicates of a polytope")
    sp = sub.add_parser("plot2d", help="SVG drawing of planar polytopes")
    sp.add_argument("files", nargs="+")
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_plot2d)
    sp = sub.add_parser("verify", help="seeded property suites")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--dim", type=int, default=verify_mod.DEFAULT_DIM)
    sp.add_argument("--coord-bound", type=int, default=None)
    sp.add_argument("--index", type=int, default=0, help="first trial index (for replay)")
    sp.add_argument("--parallel", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall time in reports")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rc = args.fn(args)
    except (UsageError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolytopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
