"""Named model families.

Boolean powerset algebras, complement-pair fans (MO_m, one pair of
incomparable middles per index), the benzene ring (the 6-element hexagon,
the smallest orthocomplemented lattice that is not orthomodular),
subspace lattices of 2-dimensional vector spaces over small prime fields,
and pastings of Boolean blocks along shared atoms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import AdmissibilityError, InvariantError, IsotropicFormError, SizeCapError
from .lattice import OrthoLattice, attach_ortho, lattice_from_poset
from .poset import poset_from_covers

__all__ = [
    "GreechieDiagram",
    "diagram_from_blocks",
    "gen_boolean",
    "gen_mo",
    "gen_o6",
    "gen_subspace_mo",
    "greechie_paste",
]

BOOLEAN_CAP = 6
RESERVED_NAMES = ("0", "1")


def gen_boolean(k: int) -> OrthoLattice:
    """Powerset lattice of a k-set with set complement, 1 <= k <= 6.

    k = 0 is rejected: a one-element lattice has bottom = top and cannot
    carry a complement satisfying both bound axioms.
    """
    if not 1 <= k <= BOOLEAN_CAP:
        raise SizeCapError(f"boolean exponent must be in [1, {BOOLEAN_CAP}], got {k}")
    n = 1 << k
    covers = []
    for s in range(n):
        for b in range(k):
            if not s >> b & 1:
                covers.append((s, s | 1 << b))
    names = []
    for s in range(n):
        if s == 0:
            names.append("0")
        elif s == n - 1:
            names.append("1")
        else:
            names.append("{" + ",".join(str(b) for b in range(k) if s >> b & 1) + "}")
    lat = lattice_from_poset(poset_from_covers(n, covers, names))
    return attach_ortho(lat, [(n - 1) ^ s for s in range(n)])


def gen_mo(m: int) -> OrthoLattice:
    """Bottom, top, and m complement pairs of mutually incomparable atoms.

    Orthomodular for every m; non-distributive from m = 2 on. m = 1 is the
    four-element Boolean algebra in disguise.
    """
    if m < 1:
        raise ValueError(f"need at least one complement pair, got {m}")
    n = 2 * m + 2
    top = n - 1
    covers = []
    names = ["0"]
    for i in range(1, m + 1):
        lo, hi = 2 * i - 1, 2 * i
        covers += [(0, lo), (0, hi), (lo, top), (hi, top)]
        names += [f"a{i}", f"a{i}'"]
    names.append("1")
    lat = lattice_from_poset(poset_from_covers(n, covers, names))
    ortho = [top]
    for i in range(1, m + 1):
        ortho += [2 * i, 2 * i - 1]
    ortho.append(0)
    return attach_ortho(lat, ortho)


def gen_o6() -> OrthoLattice:
    """The benzene ring: 0 < a < b < 1 and 0 < b' < a' < 1, sides
    incomparable, complement swapping a with a' and b with b'."""
    covers = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]
    names = ("0", "a", "b", "b'", "a'", "1")
    lat = lattice_from_poset(poset_from_covers(6, covers, names))
    return attach_ortho(lat, (5, 4, 3, 2, 1, 0))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def gen_subspace_mo(p: int) -> OrthoLattice:
    """Subspace lattice of the plane over the p-element field, with the
    orthogonal complement of the standard dot product.

    Requires the form anisotropic (no nonzero self-orthogonal vector),
    which holds exactly when p = 3 (mod 4); otherwise IsotropicFormError
    reports the first self-orthogonal line representative. The result has
    the p + 1 lines as atoms, paired by orthogonality.
    """
    if not _is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    lines = [(0, 1)] + [(1, t) for t in range(p)]
    for v in lines:
        if (v[0] * v[0] + v[1] * v[1]) % p == 0:
            raise IsotropicFormError(v)
    n = len(lines) + 2
    top = n - 1
    covers = [(0, i) for i in range(1, top)] + [(i, top) for i in range(1, top)]
    names = ["0"] + [f"span({v[0]},{v[1]})" for v in lines] + ["1"]
    lat = lattice_from_poset(poset_from_covers(n, covers, names))
    ortho = [0] * n
    ortho[0], ortho[top] = top, 0
    for i, v in enumerate(lines, start=1):
        partners = [j for j, w in enumerate(lines, start=1)
                    if (v[0] * w[0] + v[1] * w[1]) % p == 0]
        if len(partners) != 1:
            raise IsotropicFormError(v)
        ortho[i] = partners[0]
    return attach_ortho(lat, ortho)


@dataclass(frozen=True)
class GreechieDiagram:
    """Atoms grouped into Boolean blocks for pasting.

    Invariants: every block has at least two atoms, every atom appears in
    at least one block, no block is a subset of another, and no atom uses
    a reserved bound name.
    """

    atoms: tuple[str, ...]
    blocks: tuple[frozenset[str], ...]

    def __post_init__(self):
        if len(set(self.atoms)) != len(self.atoms):
            raise InvariantError("atom names must be distinct")
        for name in self.atoms:
            if name in RESERVED_NAMES:
                raise InvariantError(f"atom name {name!r} is reserved for the bounds")
        if not self.blocks:
            raise InvariantError("diagram needs at least one block")
        known = set(self.atoms)
        seen: set[str] = set()
        for b in self.blocks:
            if len(b) < 2:
                raise InvariantError(f"block {sorted(b)} has fewer than two atoms")
            stray = b - known
            if stray:
                raise InvariantError(f"block atom(s) {sorted(stray)} missing from the atom list")
            seen |= b
        if seen != known:
            raise InvariantError(f"atom(s) {sorted(known - seen)} appear in no block")
        for i, a in enumerate(self.blocks):
            for j, b in enumerate(self.blocks):
                if i != j and a <= b:
                    raise InvariantError(f"block {sorted(a)} is a subset of block {sorted(b)}")


def diagram_from_blocks(blocks) -> GreechieDiagram:
    """Build a diagram with atoms in first-appearance order."""
    atom_order: list[str] = []
    frozen = []
    for block in blocks:
        names = list(block)
        for a in names:
            if a not in atom_order:
                atom_order.append(a)
        frozen.append(frozenset(names))
    return GreechieDiagram(tuple(atom_order), tuple(frozen))


def _check_admissible(d: GreechieDiagram) -> None:
    blocks = d.blocks
    for i, j in itertools.combinations(range(len(blocks)), 2):
        if len(blocks[i] & blocks[j]) > 1:
            raise AdmissibilityError("block-intersection", (i, j))
    # loops of order 3 or 4: a cycle of distinct blocks whose consecutive
    # shared atoms are all distinct (a star through one atom is fine)
    def link(i: int, j: int) -> str | None:
        common = blocks[i] & blocks[j]
        return next(iter(common)) if common else None

    for trio in itertools.combinations(range(len(blocks)), 3):
        i, j, k = trio
        atoms3 = (link(i, j), link(j, k), link(i, k))
        if None not in atoms3 and len(set(atoms3)) == 3:
            raise AdmissibilityError("loop-3", trio)
    for quad in itertools.combinations(range(len(blocks)), 4):
        for perm in itertools.permutations(quad[1:]):
            cycle = (quad[0],) + perm
            atoms4 = tuple(link(cycle[t], cycle[(t + 1) % 4]) for t in range(4))
            if None not in atoms4 and len(set(atoms4)) == 4:
                raise AdmissibilityError("loop-4", quad)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def greechie_paste(d: GreechieDiagram, allow_violations: bool = False) -> OrthoLattice:
    """Glue each block's Boolean algebra along shared structure.

    Identified across blocks: the empty set (bottom), the full block
    (top), singletons of shared atoms, and block complements of shared
    atoms (complements are unique, so the complement of a shared atom is
    one element). The glued order is closed transitively and validated as
    an ortholattice; pastings that fail validation raise the structural
    errors of the construction pipeline. With allow_violations=False the
    diagram must first satisfy admissibility: pairwise block
    intersections of at most one atom, and no loop of order 3 or 4.
    """
    if not allow_violations:
        _check_admissible(d)
    blocks = d.blocks
    atom_pos = {a: i for i, a in enumerate(d.atoms)}
    uf = _UnionFind()
    for b, block in enumerate(blocks):
        uf.find((b, frozenset()))
        uf.find((b, block))
        if b:
            uf.union((0, frozenset()), (b, frozenset()))
            uf.union((0, blocks[0]), (b, block))
    homes: dict[str, list[int]] = {}
    for b, block in enumerate(blocks):
        for a in block:
            homes.setdefault(a, []).append(b)
    for a, bs in homes.items():
        for b in bs[1:]:
            uf.union((bs[0], frozenset((a,))), (b, frozenset((a,))))
            uf.union((bs[0], blocks[bs[0]] - {a}), (b, blocks[b] - {a}))

    members: dict = {}
    for b, block in enumerate(blocks):
        subsets = itertools.chain.from_iterable(
            itertools.combinations(sorted(block), r) for r in range(len(block) + 1))
        for combo in subsets:
            key = (b, frozenset(combo))
            members.setdefault(uf.find(key), []).append(key)

    def class_key(root) -> tuple:
        return min((len(s), tuple(sorted(s, key=atom_pos.get)), b) for b, s in members[root])

    bottom_root = uf.find((0, frozenset()))
    top_root = uf.find((0, blocks[0]))
    middles = sorted((r for r in members if r not in (bottom_root, top_root)), key=class_key)
    roots = [bottom_root] + middles + [top_root]
    index = {r: i for i, r in enumerate(roots)}
    n = len(roots)

    names = []
    for r in roots:
        if r == bottom_root:
            names.append("0")
        elif r == top_root:
            names.append("1")
        else:
            singles = sorted((next(iter(s)) for _, s in members[r] if len(s) == 1),
                             key=atom_pos.get)
            comps = sorted((next(iter(blocks[b] - s)) for b, s in members[r]
                            if len(blocks[b] - s) == 1), key=atom_pos.get)
            if singles:
                names.append(singles[0])
            elif comps:
                names.append(comps[0] + "'")
            else:
                names.append("+".join(class_key(r)[1]))
    for i, nm in enumerate(names):
        if names.index(nm) != i:
            names[i] = f"{nm}.{i}"

    relation: set[tuple[int, int]] = set()
    for b, block in enumerate(blocks):
        for r in range(len(block) + 1):
            for combo in itertools.combinations(sorted(block), r):
                s = frozenset(combo)
                lo = index[uf.find((b, s))]
                for extra in block - s:
                    hi = index[uf.find((b, s | {extra}))]
                    if lo != hi:
                        relation.add((lo, hi))
    poset = poset_from_covers(n, sorted(relation), names)
    lat = lattice_from_poset(poset)

    perp = [0] * n
    for r in roots:
        b, s = members[r][0]
        perp[index[r]] = index[uf.find((b, blocks[b] - s))]
    return attach_ortho(lat, perp)
