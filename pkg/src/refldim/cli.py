"""``refldim`` command line.

Exit status: 0 or 1 for a verdict (``check``, ``equiv``, ``find-face``),
0 for other successful commands, 2 for unreadable input and 3 for a violated
precondition, reported by its error code.
"""

import argparse
import json
import os
import sys

from . import constructions as C
from .ehrhart import ehrhart_polynomial
from .enumerate2d import classify_reflexive_polygons, edge_length_spectrum
from .equivalence import are_equivalent, find_equivalent_face
from .errors import NotInteriorError, ParseError, RefldimError
from .formats import exact, read_polytope, to_json_obj, to_text
from .polytope import Polytope, join, minkowski_sum, product
from .reflexive import (equivalence_suite, is_reflexive, polar_dual,
                        refldim_lower_bound, volume_upper_bound)
from .render import render_svg


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.obj: dict = {}
        self.lines: list[str] = []

    def put(self, key, value, text=None):
        self.obj[key] = value
        self.lines.append(text if text is not None else f"{key}: {value}")

    def polytope(self, key, P):
        self.obj[key] = to_json_obj(P)
        self.lines.append(f"{key}:")
        self.lines.append(to_text(P).rstrip("\n"))

    def flush(self):
        if self.as_json:
            print(json.dumps(self.obj, indent=2))
        else:
            print("\n".join(self.lines))


def _vec(v) -> str:
    return " ".join(exact(x) for x in v)


def _map_block(out: _Out, f, face=None):
    out.obj["map"] = {"linear": [list(r) for r in f.linear], "translation": list(f.translation)}
    out.lines.append("map:")
    out.lines.extend(_vec(r) for r in f.linear)
    out.lines.append("translation:")
    out.lines.append(_vec(f.translation))
    if face is not None:
        tight = sorted(face.tight_facets)
        out.obj["face"] = {"dim": face.dim, "tight_facets": tight,
                           "vertices": [list(v) for v in face.vertices]}
        out.lines.append(f"face: dim {face.dim}, tight facets {' '.join(map(str, tight))}")


def _witness(out: _Out, w: C.EmbeddingWitness):
    out.put("construction", w.construction)
    out.put("dimension", w.dimension)
    out.put("verified", w.verify())
    out.polytope("host", w.host)
    _map_block(out, w.map, w.face)


def cmd_check(a, out):
    P = read_polytope(a.file)
    rep = is_reflexive(P)
    out.put("reflexive", rep.is_reflexive)
    out.put("interior_count", rep.interior_count)
    if rep.interior_point is not None:
        out.put("interior_point", list(rep.interior_point), f"interior_point: {_vec(rep.interior_point)}")
        out.put("distances", list(rep.facet_distances), f"distances: {_vec(rep.facet_distances)}")
    if a.suite and rep.interior_count == 1:
        s = equivalence_suite(P)
        names = ("distance_one", "dual_integral", "facet_volumes", "shifted_ehrhart", "hstar_palindromic")
        out.put("suite", dict(zip(names, s.values)),
                "suite: " + " ".join(f"{n}={v}" for n, v in zip(names, s.values)))
    return 0 if rep.is_reflexive else 1


def _interior_point(P, given):
    if given is not None:
        return tuple(int(x) for x in given.split(","))
    rep = is_reflexive(P)
    if rep.interior_count == 1:
        return rep.interior_point
    pts = P.interior_lattice_points()
    if not pts:
        raise NotInteriorError("no interior lattice point; pass --point")
    return pts[0]


def cmd_dual(a, out):
    P = read_polytope(a.file)
    x0 = _interior_point(P, a.point)
    D = polar_dual(P, x0)
    out.put("center", list(x0), f"center: {_vec(x0)}")
    out.put("lattice", D.is_lattice)
    verts = [[exact(x) for x in v] for v in D.vertices]
    out.obj["dual"] = {"ambient_dim": D.ambient_dim, "vertices": verts}
    out.lines.append("dual:")
    out.lines.append(f"{len(verts)} {D.ambient_dim}")
    out.lines.extend(" ".join(v) for v in verts)
    return 0


def cmd_ehrhart(a, out):
    P = read_polytope(a.file)
    e = ehrhart_polynomial(P)
    out.put("dim", e.dim)
    out.put("coefficients", [exact(c) for c in e.coefficients],
            "coefficients: " + _vec(e.coefficients))
    out.put("hstar", list(e.hstar), "hstar: " + _vec(e.hstar))
    return 0


def cmd_embed(a, out):
    _witness(out, C.embed_reflexive_wedge(read_polytope(a.file)))
    return 0


def cmd_segment(a, out):
    w = C.segment_embed(a.length)
    dec = w.details.get("decomposition")
    if dec is not None:
        out.put("decomposition", {"N": dec.N, "m": dec.m, "n": dec.n, "m_parts": list(dec.m_parts),
                                  "n_parts": list(dec.n_parts), "simplex": list(dec.spec.a)},
                f"decomposition: N={dec.N} m={dec.m} n={dec.n} m_parts={list(dec.m_parts)} "
                f"n_parts={list(dec.n_parts)} simplex={list(dec.spec.a)}")
    _witness(out, w)
    return 0


def cmd_pwz(a, out):
    P = C.pwz_simplex(a.d, a.modified)
    rep = is_reflexive(P)
    out.put("reflexive", rep.is_reflexive)
    out.polytope("polytope", P)
    return 0


def cmd_wedge(a, out):
    W = C.wedge(read_polytope(a.file), a.facet)
    out.polytope("polytope", W)
    return 0


def cmd_dilate(a, out):
    _witness(out, C.refldim_upper(read_polytope(a.file), a.k))
    return 0


def cmd_product(a, out):
    out.polytope("polytope", product(read_polytope(a.file1), read_polytope(a.file2)))
    return 0


def cmd_join(a, out):
    out.polytope("polytope", join(read_polytope(a.file1), read_polytope(a.file2)))
    return 0


def cmd_equiv(a, out):
    f = are_equivalent(read_polytope(a.file1), read_polytope(a.file2))
    if f is None:
        out.put("equivalent", False, "none")
        return 1
    out.put("equivalent", True)
    _map_block(out, f)
    return 0


def cmd_find_face(a, out):
    found = find_equivalent_face(read_polytope(a.file), read_polytope(a.host))
    if found is None:
        out.put("found", False, "none")
        return 1
    face, f = found
    out.put("found", True)
    _map_block(out, f, face)
    return 0


def cmd_classify2d(a, out):
    res = classify_reflexive_polygons(a.box)
    out.put("search_box", res.search_box)
    out.put("raw_hits", res.raw_hits)
    out.put("classes", len(res.classes))
    out.obj["polygons"] = [to_json_obj(P) for P in res.classes]
    for i, P in enumerate(res.classes):
        out.lines.append(f"class {i + 1}:")
        out.lines.append(to_text(P).rstrip("\n"))
        if a.out:
            os.makedirs(a.out, exist_ok=True)
            with open(os.path.join(a.out, f"class{i + 1:02d}.txt"), "w") as fh:
                fh.write(to_text(P))
    return 0


def cmd_spectrum(a, out):
    spec = sorted(edge_length_spectrum(read_polytope(f) for f in a.files))
    out.put("edge_lengths", spec, "edge_lengths: " + _vec(spec))
    return 0


def cmd_bound(a, out):
    if a.dim is not None:
        out.put("volume_upper_bound", volume_upper_bound(a.dim))
    if a.file:
        P = read_polytope(a.file)
        out.put("normalized_volume", P.normalized_volume)
        out.put("lower", refldim_lower_bound(P))
        w = C.refldim_upper(P, 1)
        out.put("upper", w.dimension)
        out.put("upper_construction", w.construction)
    return 0


def _box(n):
    return Polytope.from_vertices([(0, 0), (n, 0), (0, 1), (n, 1)])


def cmd_minkowski(a, out):
    """Host dimensions for P, P' and P + P' on small planar families."""
    rows = []
    for i in range(1, a.max + 1):
        for j in range(1, a.max + 1):
            P = Polytope.from_vertices([(0, 0), (i, 0)])
            Q = Polytope.from_vertices([(0, 0), (0, j)])
            for name, X, Y in (("segments", P, Q), ("segment+strip", P, _box(j))):
                S = minkowski_sum(X, Y)
                dx, dy, ds = (C.refldim_upper(Z).dimension for Z in (X, Y, S))
                rows.append({"family": name, "i": i, "j": j, "P": dx, "Q": dy, "sum": ds,
                             "excess": ds - dx - dy})
    out.obj["rows"] = rows
    out.lines.append("family i j P Q sum sum-P-Q")
    out.lines.extend(f"{r['family']} {r['i']} {r['j']} {r['P']} {r['Q']} {r['sum']} {r['excess']}"
                     for r in rows)
    out.put("max_excess", max(r["excess"] for r in rows))
    return 0


def cmd_render(a, out):
    P = read_polytope(a.file)
    svg = render_svg(P, title=os.path.basename(a.file))
    if a.output:
        with open(a.output, "w") as fh:
            fh.write(svg)
        out.put("written", a.output)
    else:
        sys.stdout.write(svg)
        out.lines, out.obj = [], {}
        out.flush = lambda: None
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="refldim", description="Reflexive lattice polytope toolkit.")
    p.add_argument("--json", action="store_true", help="structured output")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(fn=fn)
        return s

    s = verb("check", cmd_check, "reflexivity certificate")
    s.add_argument("file")
    s.add_argument("--suite", action="store_true", help="also evaluate the equivalent criteria")
    s = verb("dual", cmd_dual, "polar dual")
    s.add_argument("file")
    s.add_argument("--point", help="interior point, comma separated")
    verb("ehrhart", cmd_ehrhart, "Ehrhart polynomial and h*-vector").add_argument("file")
    verb("embed", cmd_embed, "reflexive host via wedges").add_argument("file")
    verb("segment", cmd_segment, "reflexive host with an edge of given length").add_argument("length", type=int)
    s = verb("pwz", cmd_pwz, "Sylvester simplex")
    s.add_argument("d", type=int)
    s.add_argument("--modified", action="store_true")
    s = verb("wedge", cmd_wedge, "wedge over a facet")
    s.add_argument("file")
    s.add_argument("--facet", type=int, required=True)
    s = verb("dilate", cmd_dilate, "best reflexive host for kP")
    s.add_argument("k", type=int)
    s.add_argument("file")
    for name, fn in (("product", cmd_product), ("join", cmd_join)):
        s = verb(name, fn, f"{name} of two polytopes")
        s.add_argument("file1")
        s.add_argument("file2")
    s = verb("equiv", cmd_equiv, "lattice equivalence test")
    s.add_argument("file1")
    s.add_argument("file2")
    s = verb("find-face", cmd_find_face, "face of HOST equivalent to FILE")
    s.add_argument("file")
    s.add_argument("host")
    s = verb("classify2d", cmd_classify2d, "all reflexive polygons")
    s.add_argument("--box", type=int, default=4)
    s.add_argument("--out", help="directory for one file per class")
    verb("spectrum", cmd_spectrum, "edge lattice lengths").add_argument("files", nargs="+")
    s = verb("bound", cmd_bound, "reflexive dimension bounds")
    s.add_argument("file", nargs="?")
    s.add_argument("--dim", type=int, help="print the volume bound for this dimension")
    s = verb("minkowski-experiment", cmd_minkowski, "host dimensions of Minkowski sums")
    s.add_argument("--max", type=int, default=3)
    s = verb("render-svg", cmd_render, "draw a polygon")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.json)
    try:
        code = args.fn(args, out)
    except ParseError as e:
        print(f"error: Parse: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: Parse: {e}", file=sys.stderr)
        return 2
    except RefldimError as e:
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return 3
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
