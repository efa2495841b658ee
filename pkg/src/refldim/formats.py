"""Polytope file formats.

Text: a header ``m d`` followed by ``m`` lines of ``d`` integers.  Blank
lines and ``#`` comments are ignored.  JSON: ``{"ambient_dim": d,
"vertices": [[...], ...]}``.  Facets are always recomputed on read.
"""

import json
from fractions import Fraction

from .errors import ParseError
from .polytope import Polytope


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks, col = [], 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((part, col + 1))
            col += len(part)
        if toks:
            yield lineno, toks


def _int(tok, lineno) -> int:
    s, col = tok
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}", lineno, col) from None


def parse_text(text: str) -> Polytope:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty input", 1, 1)
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'm d'", lineno, head[0][1])
    m, d = (_int(t, lineno) for t in head)
    if m < 1 or d < 1:
        raise ParseError("vertex count and dimension must be positive", lineno, head[0][1])
    body = lines[1:]
    if len(body) != m:
        where = body[-1][0] + 1 if body else lineno + 1
        raise ParseError(f"expected {m} vertex lines, found {len(body)}", where, 1)
    pts = []
    for lineno, toks in body:
        if len(toks) != d:
            col = toks[d][1] if len(toks) > d else toks[-1][1] + len(toks[-1][0])
            raise ParseError(f"expected {d} coordinates, found {len(toks)}", lineno, col)
        pts.append([_int(t, lineno) for t in toks])
    return Polytope.from_vertices(pts)


def parse_json(text: str) -> Polytope:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    try:
        d, verts = obj["ambient_dim"], obj["vertices"]
        if any(len(v) != d or any(not isinstance(x, int) for x in v) for v in verts):
            raise ParseError(f"every vertex needs {d} integer coordinates", 1, 1)
    except (KeyError, TypeError):
        raise ParseError("expected {ambient_dim, vertices}", 1, 1) from None
    if not verts:
        raise ParseError("no vertices", 1, 1)
    return Polytope.from_vertices(verts)


def parse(text: str) -> Polytope:
    """Text or JSON, detected by the first non-blank character."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def read_polytope(path: str) -> Polytope:
    with open(path) as fh:
        return parse(fh.read())


def to_text(P: Polytope) -> str:
    lines = [f"{len(P.vertices)} {P.ambient_dim}"]
    lines += [" ".join(map(str, v)) for v in P.vertices]
    return "\n".join(lines) + "\n"


def to_json_obj(P: Polytope) -> dict:
    return {"ambient_dim": P.ambient_dim, "vertices": [list(v) for v in P.vertices]}


def to_json(P: Polytope) -> str:
    return json.dumps(to_json_obj(P))


def exact(x) -> str:
    """Decimal text for an integer or fraction (``3``, ``-1/2``)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
