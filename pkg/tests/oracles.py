"""Independent reference implementations used to freeze expected values.

Everything here works on explicit pair sets and frozensets, never on the
package's bitmask rows or precomputed tables, so a table bug cannot agree
with the oracle by construction.
"""

from __future__ import annotations

from itertools import combinations, permutations

import ortholat as ol


def relation_of(L) -> set[tuple[int, int]]:
    """The full order relation as a pair set, read element by element."""
    return {(x, y) for x in range(L.n) for y in range(L.n) if L.leq(x, y)}


def down_sets(n: int, rel: set[tuple[int, int]]) -> dict[int, frozenset[int]]:
    return {x: frozenset(y for y in range(n) if (y, x) in rel) for x in range(n)}


def up_sets(n: int, rel: set[tuple[int, int]]) -> dict[int, frozenset[int]]:
    return {x: frozenset(y for y in range(n) if (x, y) in rel) for x in range(n)}


def glb(n: int, rel: set[tuple[int, int]], x: int, y: int) -> int | None:
    down = down_sets(n, rel)
    common = down[x] & down[y]
    greatest = [m for m in common if common <= down[m]]
    return greatest[0] if len(greatest) == 1 else None


def lub(n: int, rel: set[tuple[int, int]], x: int, y: int) -> int | None:
    up = up_sets(n, rel)
    common = up[x] & up[y]
    least = [m for m in common if common <= up[m]]
    return least[0] if len(least) == 1 else None


def is_transitive(n: int, rel: set[tuple[int, int]]) -> bool:
    up = up_sets(n, rel)
    return all(up[y] <= up[x] for (x, y) in rel)


def lattice_classification(n: int, rel: set[tuple[int, int]]) -> str:
    """What a pasted or random order is: 'no-bounds', 'not-a-lattice', or
    'lattice'."""
    if not any(all((b, x) in rel for x in range(n)) for b in range(n)):
        return "no-bounds"
    if not any(all((x, t) in rel for x in range(n)) for t in range(n)):
        return "no-bounds"
    for x in range(n):
        for y in range(n):
            if glb(n, rel, x, y) is None or lub(n, rel, x, y) is None:
                return "not-a-lattice"
    return "lattice"


def upper_triangular_relations(n: int):
    """Every reflexive transitive relation whose strict part points up in
    index order. Each isomorphism class of posets on n elements has at
    least one such labeling, so canonicalizing the survivors hits every
    class exactly once."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rel = {(i, i) for i in range(n)}
        for t, p in enumerate(pairs):
            if mask >> t & 1:
                rel.add(p)
        if is_transitive(n, rel):
            yield rel


def ortholattice_classes_brute_force(n: int) -> set[bytes]:
    """Canonical forms of every ortholattice on n elements, by filtering
    labeled posets, lattice-checking with set arithmetic, and trying every
    complement permutation against the four axioms."""
    forms: set[bytes] = set()
    for rel in upper_triangular_relations(n):
        if lattice_classification(n, rel) != "lattice":
            continue
        bottom = next(b for b in range(n) if all((b, x) in rel for x in range(n)))
        top = next(t for t in range(n) if all((x, t) in rel for x in range(n)))
        for perm in permutations(range(n)):
            if any(perm[perm[x]] != x for x in range(n)):
                continue
            if any(((x, y) in rel) != ((perm[y], perm[x]) in rel)
                   for x in range(n) for y in range(n)):
                continue
            if any(glb(n, rel, x, perm[x]) != bottom for x in range(n)):
                continue
            if any(lub(n, rel, x, perm[x]) != top for x in range(n)):
                continue
            lat = ol.lattice_from_poset(
                ol.poset_from_covers(n, [p for p in rel if p[0] != p[1]]))
            forms.add(ol.canonical_form(ol.attach_ortho(lat, perm)))
    return forms


def pasted_relation(blocks: list[list[str]]):
    """Order of a pasting assembled with dictionaries and string keys:
    elements are the glued (block, subset) classes, related when one
    subset sits inside another within a shared block."""
    frozen = [frozenset(b) for b in blocks]

    def canon_element(b: int, s: frozenset) -> tuple:
        if not s:
            return ("bottom",)
        if s == frozen[b]:
            return ("top",)
        if len(s) == 1:
            return ("atom", min(s))
        missing = frozen[b] - s
        if len(missing) == 1 and any(min(missing) in other
                                     for i, other in enumerate(frozen) if i != b):
            return ("coatom-of-shared", min(missing))
        return ("subset", b, tuple(sorted(s)))

    elements: set[tuple] = set()
    rel: set[tuple] = set()
    for b, block in enumerate(frozen):
        subs = [frozenset(c) for r in range(len(block) + 1)
                for c in combinations(sorted(block), r)]
        for s in subs:
            elements.add(canon_element(b, s))
            for t in subs:
                if s <= t:
                    rel.add((canon_element(b, s), canon_element(b, t)))
    index = {e: i for i, e in enumerate(sorted(elements))}
    n = len(index)
    pairs = {(index[a], index[c]) for a, c in rel}
    # transitive closure
    changed = True
    while changed:
        changed = False
        for a, c in list(pairs):
            for c2, d in list(pairs):
                if c == c2 and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
    return n, pairs
