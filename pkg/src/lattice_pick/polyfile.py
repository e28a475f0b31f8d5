"""Text format for polytope files.

UTF-8, '#' starts a comment, tokens are whitespace separated. Each body is

    dim 2|3
    vertices <count>
    <count> coordinate rows
    facets <count>          (3D only)
    <count> rows: <k> <i1> ... <ik>

with bodies separated by blank lines. Errors carry the offending line
number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import ConvexPolytope3, GeometryError, IntegerPolygon2, Polytope


class PolytopeFormatError(GeometryError):
    """Malformed polytope file; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class _Line:
    number: int
    tokens: tuple[str, ...]


def _meaningful_lines(text: str) -> list[_Line]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        out.append(_Line(i, tuple(body.split())))
    return out


def _parse_int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise PolytopeFormatError(line, f"{what} must be an integer, got {tok!r}") from None


def parse_polytopes(text: str) -> list[Polytope]:
    """Parse every body in the file, in order."""
    lines = _meaningful_lines(text)
    pos = 0
    n = len(lines)

    def skip_blank():
        nonlocal pos
        while pos < n and not lines[pos].tokens:
            pos += 1

    def take(expect: str) -> _Line:
        nonlocal pos
        if pos >= n or not lines[pos].tokens:
            where = lines[pos].number if pos < n else (lines[-1].number + 1 if lines else 1)
            raise PolytopeFormatError(where, f"expected {expect}, got end of block")
        ln = lines[pos]
        pos += 1
        return ln

    bodies: list[Polytope] = []
    skip_blank()
    while pos < n:
        ln = take("'dim 2' or 'dim 3'")
        if ln.tokens[0] != "dim":
            raise PolytopeFormatError(ln.number, f"expected 'dim', got {ln.tokens[0]!r}")
        if len(ln.tokens) != 2 or ln.tokens[1] not in ("2", "3"):
            raise PolytopeFormatError(ln.number, "expected 'dim 2' or 'dim 3'")
        dim = int(ln.tokens[1])

        ln = take("'vertices <count>'")
        if ln.tokens[0] != "vertices" or len(ln.tokens) != 2:
            raise PolytopeFormatError(ln.number, "expected 'vertices <count>'")
        n_vertices = _parse_int(ln.tokens[1], ln.number, "vertex count")
        if n_vertices < 3:
            raise PolytopeFormatError(ln.number, f"vertex count {n_vertices} too small")

        vertices = []
        for _ in range(n_vertices):
            ln = take(f"{dim} integer coordinates")
            if len(ln.tokens) != dim:
                raise PolytopeFormatError(
                    ln.number,
                    f"expected {dim} coordinates, got {len(ln.tokens)}",
                )
            vertices.append(
                tuple(_parse_int(t, ln.number, "coordinate") for t in ln.tokens)
            )

        if dim == 2:
            try:
                bodies.append(IntegerPolygon2(vertices))
            except GeometryError as exc:
                raise PolytopeFormatError(ln.number, f"invalid polygon: {exc}") from exc
        else:
            ln = take("'facets <count>'")
            if ln.tokens[0] != "facets" or len(ln.tokens) != 2:
                raise PolytopeFormatError(ln.number, "expected 'facets <count>'")
            n_facets = _parse_int(ln.tokens[1], ln.number, "facet count")
            facets = []
            for _ in range(n_facets):
                ln = take("a facet row '<k> <i1> ... <ik>'")
                k = _parse_int(ln.tokens[0], ln.number, "facet size")
                if len(ln.tokens) != k + 1:
                    raise PolytopeFormatError(
                        ln.number,
                        f"facet row declares {k} indices but has {len(ln.tokens) - 1}",
                    )
                facets.append(
                    tuple(_parse_int(t, ln.number, "vertex index") for t in ln.tokens[1:])
                )
            try:
                bodies.append(ConvexPolytope3(vertices, facets))
            except GeometryError as exc:
                raise PolytopeFormatError(ln.number, f"invalid polytope: {exc}") from exc

        # after a body: only blank lines, then either EOF or the next body
        if pos < n and lines[pos].tokens:
            raise PolytopeFormatError(
                lines[pos].number,
                f"trailing content {' '.join(lines[pos].tokens)!r} after a complete body "
                f"(bodies are separated by blank lines)",
            )
        skip_blank()

    if not bodies:
        raise PolytopeFormatError(1, "file contains no polytope")
    return bodies


def serialize_polytope(P: Polytope) -> str:
    """Write one body in the file format."""
    lines = [f"dim {P.dim}", f"vertices {len(P.vertices)}"]
    for v in P.vertices:
        lines.append(" ".join(str(c) for c in v))
    if isinstance(P, ConvexPolytope3):
        lines.append(f"facets {len(P.facets)}")
        for cyc in P.facets:
            lines.append(f"{len(cyc)} " + " ".join(str(i) for i in cyc))
    return "\n".join(lines) + "\n"


def serialize_polytopes(bodies: list[Polytope]) -> str:
    return "\n".join(serialize_polytope(P) for P in bodies)


def parse_generators(text: str) -> list[tuple[int, ...]]:
    """Generator file for zonotopes: one integer vector per line, all of the
    same dimension (2 or 3); '#' comments and blank lines allowed."""
    gens = []
    for ln in _meaningful_lines(text):
        if not ln.tokens:
            continue
        vec = tuple(_parse_int(t, ln.number, "generator entry") for t in ln.tokens)
        if len(vec) not in (2, 3):
            raise PolytopeFormatError(
                ln.number, f"generator must have 2 or 3 entries, got {len(vec)}"
            )
        gens.append(vec)
    if not gens:
        raise PolytopeFormatError(1, "no generators in file")
    if len({len(g) for g in gens}) != 1:
        raise PolytopeFormatError(1, "generators mix dimensions")
    return gens
