"""Canonical forms for posets and ortholattices, exact at desk scale.

The canonical form is the minimal relabeled encoding over all permutations
that respect an iteratively refined invariant partition (element signatures
built from up/down set sizes, neighbor classes, and the complement map).
The search prunes with level-minimal row selection and by skipping
candidates interchangeable under a structure-preserving swap, so the
symmetric families (Boolean cubes, complement-pair fans) stay cheap.
Equal byte strings are equivalent to the existence of a bijection
preserving the order relation (and the complement map, when present).
"""

from __future__ import annotations

from typing import Sequence

from .lattice import FiniteLattice, Latticelike, OrthoLattice, lattice_from_poset
from .poset import FinitePoset, bits, poset_from_masks

__all__ = ["CanonicalForm", "canonical_form", "is_isomorphic", "relabel"]

CanonicalForm = bytes


def _refine(n: int, up: Sequence[int], down: Sequence[int],
            perp: Sequence[int] | None) -> list[int]:
    """Invariant partition: class ids per element, label-independent."""
    keys: list[tuple] = [(down[i].bit_count(), up[i].bit_count()) for i in range(n)]
    rank = {k: r for r, k in enumerate(sorted(set(keys)))}
    cls = [rank[k] for k in keys]
    while True:
        keys = []
        for i in range(n):
            above = tuple(sorted(cls[j] for j in bits(up[i] & ~(1 << i))))
            below = tuple(sorted(cls[j] for j in bits(down[i] & ~(1 << i))))
            pc = cls[perp[i]] if perp is not None else -1
            keys.append((cls[i], above, below, pc))
        rank = {k: r for r, k in enumerate(sorted(set(keys)))}
        new_cls = [rank[k] for k in keys]
        if new_cls == cls:
            return cls
        cls = new_cls


def canonical_encoding(n: int, up: Sequence[int],
                       perp: Sequence[int] | None = None) -> tuple[bytes, tuple[int, ...]]:
    """Return (canonical bytes, element order) for raw up-masks.

    The returned tuple lists the original element at each canonical
    position; it realizes the minimum over class-respecting relabelings.
    """
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    cls = _refine(n, up, down, perp)
    by_class: dict[int, list[int]] = {}
    for i, c in enumerate(cls):
        by_class.setdefault(c, []).append(i)
    pos_cls: list[int] = []
    for c in sorted(by_class):
        pos_cls.extend([c] * len(by_class[c]))

    sentinel = n

    def twins(e1: int, e2: int) -> bool:
        b1, b2 = 1 << e1, 1 << e2
        return (up[e1] & ~b1) == (up[e2] & ~b2) and (down[e1] & ~b1) == (down[e2] & ~b2)

    def dfs(assigned: list[int], pos_of: dict[int, int], used: int):
        p = len(assigned)
        if p == n:
            return (), ()
        rows = []
        for e in by_class[pos_cls[p]]:
            if used >> e & 1:
                continue
            dbits = ubits = 0
            for q, f in enumerate(assigned):
                if up[f] >> e & 1:
                    dbits |= 1 << q
                if up[e] >> f & 1:
                    ubits |= 1 << q
            ob = sentinel if perp is None else pos_of.get(perp[e], sentinel)
            rows.append(((dbits, ubits, ob), e))
        least = min(r for r, _ in rows)
        kept: list[int] = []
        for r, e in rows:
            if r != least:
                continue
            redundant = False
            for k in kept:
                if not twins(k, e):
                    continue
                if perp is None:
                    redundant = True
                    break
                pk, pe = perp[k], perp[e]
                if pk == e or (pk not in pos_of and pe not in pos_of and twins(pk, pe)):
                    redundant = True
                    break
            if not redundant:
                kept.append(e)
        best = None
        for e in kept:
            pos_of[e] = p
            assigned.append(e)
            sub_stream, sub_elems = dfs(assigned, pos_of, used | (1 << e))
            assigned.pop()
            del pos_of[e]
            cand = ((least, *sub_stream), (e, *sub_elems))
            if best is None or cand[0] < best[0]:
                best = cand
        return best

    _, elems = dfs([], {}, 0)
    width = (n + 7) // 8
    out = bytearray([1 if perp is not None else 0])
    out += n.to_bytes(2, "big")
    pos = {e: p for p, e in enumerate(elems)}
    for e in elems:
        mask = 0
        for f in bits(up[e]):
            mask |= 1 << pos[f]
        out += mask.to_bytes(width, "big")
    if perp is not None:
        for e in elems:
            out += pos[perp[e]].to_bytes(2, "big")
    return bytes(out), elems


def _raw(obj) -> tuple[int, tuple[int, ...], tuple[int, ...] | None]:
    if isinstance(obj, OrthoLattice):
        return obj.n, obj.poset.up, obj.perp
    if isinstance(obj, FiniteLattice):
        return obj.n, obj.poset.up, None
    if isinstance(obj, FinitePoset):
        return obj.n, obj.up, None
    raise TypeError(f"cannot canonicalize {type(obj).__name__}")


def canonical_form(obj: Latticelike | FinitePoset) -> CanonicalForm:
    """Byte string identifying the isomorphism class (order + complement)."""
    n, up, perp = _raw(obj)
    return canonical_encoding(n, up, perp)[0]


def is_isomorphic(a: Latticelike | FinitePoset, b: Latticelike | FinitePoset) -> bool:
    return canonical_form(a) == canonical_form(b)


def relabel(obj, perm: Sequence[int]):
    """Apply a relabeling (perm[old] = new index) and rebuild the value."""
    n, up, perp = _raw(obj)
    if sorted(perm) != list(range(n)):
        raise ValueError("relabeling must be a permutation of the element indices")
    new_up = [0] * n
    names = [""] * n
    old_names = obj.names
    for old in range(n):
        mask = 0
        for f in bits(up[old]):
            mask |= 1 << perm[f]
        new_up[perm[old]] = mask
        names[perm[old]] = old_names[old]
    p = poset_from_masks(n, new_up, names)
    if isinstance(obj, FinitePoset):
        return p
    lat = lattice_from_poset(p)
    if isinstance(obj, FiniteLattice):
        return lat
    new_perp = [0] * n
    for old in range(n):
        new_perp[perm[old]] = perm[perp[old]]
    return OrthoLattice(lat, tuple(new_perp))
