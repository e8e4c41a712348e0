"""File formats: the lattice format (OLF), block diagrams (GDF), and
covering-graph export for graphviz.

OLF is line oriented with `#` comments. Line one is the header `olf 1`,
then `n <count>`, optional `name <idx> <string>` lines, `cover <i> <j>`
lines (j covers i), and `ortho <i> <j>` lines listing each complement pair
once, lower index first. Indices are 0-based; element 0 need not be the
bottom. Export is fully sorted so identical structures serialize to
identical bytes, and parsing an export reproduces the exact structure.

GDF holds one pasting block per line as whitespace-separated atom names.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrthoAxiomError, ParseError
from .families import GreechieDiagram, diagram_from_blocks
from .lattice import OrthoLattice, attach_ortho, lattice_from_poset
from .poset import poset_from_covers

__all__ = [
    "OlfDocument",
    "parse_olf_document",
    "parse_olf",
    "export_olf",
    "export_dot",
    "parse_gdf",
]

OLF_VERSION = 1


@dataclass(frozen=True)
class OlfDocument:
    """Parsed but not yet validated OLF content."""

    version: int
    n: int
    names: tuple[str, ...]
    covers: tuple[tuple[int, int], ...]
    ortho_pairs: tuple[tuple[int, int], ...]
    ortho_lines: tuple[int, ...]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int_field(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {token!r}") from None


def parse_olf_document(text: str) -> OlfDocument:
    lines = list(_content_lines(text))
    if not lines or lines[0][1][0] != "olf":
        raise ParseError(lines[0][0] if lines else 1, "missing header")
    lineno, head = lines[0]
    if len(head) != 2 or _int_field(head[1], lineno, "version") != OLF_VERSION:
        raise ParseError(lineno, f"unsupported version {' '.join(head[1:])!r}")

    n = -1
    names: dict[int, str] = {}
    covers: list[tuple[int, int]] = []
    cover_set: set[tuple[int, int]] = set()
    pair_of: dict[int, int] = {}
    pair_line: dict[int, int] = {}
    last_line = lineno

    def check_index(v: int, where: int) -> None:
        if not 0 <= v < n:
            raise ParseError(where, f"index {v} out of range [0, {n})")

    for lineno, tokens in lines[1:]:
        last_line = lineno
        word, args = tokens[0], tokens[1:]
        if word == "n":
            if n >= 0:
                raise ParseError(lineno, "duplicate element count")
            if len(args) != 1:
                raise ParseError(lineno, "expected: n <count>")
            n = _int_field(args[0], lineno, "element count")
            if n < 1:
                raise ParseError(lineno, f"element count must be positive, got {n}")
            continue
        if n < 0:
            raise ParseError(lineno, f"'{word}' before element count")
        if word == "name":
            if len(args) != 2:
                raise ParseError(lineno, "expected: name <idx> <string>")
            idx = _int_field(args[0], lineno, "name index")
            check_index(idx, lineno)
            if idx in names:
                raise ParseError(lineno, f"duplicate name for element {idx}")
            if args[1] in names.values():
                raise ParseError(lineno, f"duplicate name {args[1]!r}")
            names[idx] = args[1]
        elif word == "cover":
            if len(args) != 2:
                raise ParseError(lineno, "expected: cover <i> <j>")
            i, j = (_int_field(a, lineno, "cover index") for a in args)
            check_index(i, lineno)
            check_index(j, lineno)
            if i == j:
                raise ParseError(lineno, f"degenerate cover ({i}, {j})")
            if (i, j) in cover_set:
                raise ParseError(lineno, f"duplicate cover ({i}, {j})")
            cover_set.add((i, j))
            covers.append((i, j))
        elif word == "ortho":
            if len(args) != 2:
                raise ParseError(lineno, "expected: ortho <i> <j>")
            i, j = (_int_field(a, lineno, "ortho index") for a in args)
            check_index(i, lineno)
            check_index(j, lineno)
            if i > j:
                raise ParseError(lineno, "ortho pair must list the lower index first")
            for v in {i, j}:
                if v in pair_of:
                    raise ParseError(lineno, f"element {v} already has an ortho pair")
            pair_of[i], pair_of[j] = j, i
            pair_line[i] = pair_line[j] = lineno
        else:
            raise ParseError(lineno, f"unknown directive {word!r}")

    if n < 0:
        raise ParseError(last_line, "missing element count")
    for x in range(n):
        if x not in pair_of:
            raise ParseError(last_line, f"element {x} has no ortho pair")
    full_names = tuple(names.get(i, str(i)) for i in range(n))
    ortho_pairs = tuple(sorted((i, j) for i, j in pair_of.items() if i <= j))
    ortho_lines = tuple(pair_line[i] for i, _ in ortho_pairs)
    return OlfDocument(OLF_VERSION, n, full_names, tuple(covers), ortho_pairs, ortho_lines)


def build_ortholattice(doc: OlfDocument) -> OrthoLattice:
    """Validate a document through the construction pipeline."""
    poset = poset_from_covers(doc.n, doc.covers, doc.names)
    lat = lattice_from_poset(poset)
    perp = [0] * doc.n
    for i, j in doc.ortho_pairs:
        perp[i], perp[j] = j, i
    try:
        return attach_ortho(lat, perp)
    except OrthoAxiomError as err:
        line = None
        for (i, j), at in zip(doc.ortho_pairs, doc.ortho_lines):
            if err.witness[0] in (i, j):
                line = at
                break
        raise OrthoAxiomError(err.axiom, err.witness, line) from None


def parse_olf(text: str) -> OrthoLattice:
    """Parse and fully validate an OLF document."""
    return build_ortholattice(parse_olf_document(text))


def export_olf(L: OrthoLattice) -> str:
    lines = [f"olf {OLF_VERSION}", f"n {L.n}"]
    lines += [f"name {i} {L.names[i]}" for i in range(L.n)]
    lines += [f"cover {i} {j}" for i, j in L.poset.covers()]
    pairs = sorted((min(x, L.perp[x]), max(x, L.perp[x])) for x in range(L.n))
    lines += [f"ortho {i} {j}" for i, j in dict.fromkeys(pairs)]
    return "\n".join(lines) + "\n"


def export_dot(L: OrthoLattice) -> str:
    """Covering graph in DOT, one node per element, drawn bottom to top."""

    def quote(name: str) -> str:
        return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["digraph lattice {", "  rankdir=BT;"]
    lines += [f"  {quote(L.names[i])} [label={quote(L.names[i])}];" for i in range(L.n)]
    lines += [f"  {quote(L.names[i])} -> {quote(L.names[j])};" for i, j in L.poset.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_gdf(text: str) -> GreechieDiagram:
    """One block per line, whitespace-separated atom names, `#` comments."""
    blocks: list[list[str]] = []
    for lineno, tokens in _content_lines(text):
        if len(set(tokens)) != len(tokens):
            raise ParseError(lineno, "duplicate atom within a block")
        blocks.append(tokens)
    if not blocks:
        raise ParseError(1, "no blocks")
    return diagram_from_blocks(blocks)
