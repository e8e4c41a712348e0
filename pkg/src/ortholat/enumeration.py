"""Isomorph-free exhaustive generation of small ortholattices.

Lattices are grown without their bottom element: a state is a poset with a
top in which every pair has a least upper bound (exactly the shape of a
finite lattice minus its bottom). Each growth step adds a new element
below an antichain of existing ones, keeping the least-upper-bound
property; duplicates are removed by canonical form, so each step keeps one
representative per isomorphism class. Adding back the bottom yields each
lattice class exactly once. Valid orthocomplementations are then found by
backtracking over complement pairings and deduplicated by the canonical
form of the resulting ortholattice.

Output is sorted by (size, canonical form) and is byte-identical across
worker counts: states and representatives are stored in canonical
relabeling, so merge order cannot matter. The work budget is checked at
level boundaries; on overflow the summary keeps exactly the fully
completed sizes, never a silent truncation.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .canon import canonical_encoding
from .checks import (
    check_defect_construction,
    check_modular_inequality,
    check_order_implies_compat,
    check_orthomodular,
    defect_pairs,
    PropertyReport,
)
from .errors import BudgetExceeded, SizeCapError
from .lattice import OrthoLattice, attach_ortho, lattice_from_poset
from .poset import bits, poset_from_masks

__all__ = [
    "EnumeratedClass",
    "EnumerationSummary",
    "enumerate_ortholattices",
    "cross_validate",
    "has_benzene_subalgebra",
    "SIZE_CAP",
    "DEFAULT_WORK_BUDGET",
]

SIZE_CAP = 14
DEFAULT_WORK_BUDGET = 50_000_000


@dataclass(frozen=True)
class EnumeratedClass:
    size: int
    form: bytes
    lattice: OrthoLattice = field(repr=False)
    orthomodular: bool


@dataclass(frozen=True)
class EnumerationSummary:
    """One representative per ortho-isomorphism class, per even size."""

    max_size: int
    classes: tuple[EnumeratedClass, ...]
    complete: bool
    completed_sizes: tuple[int, ...]

    def by_size(self, size: int) -> list[EnumeratedClass]:
        return [c for c in self.classes if c.size == size]

    def count(self, size: int) -> int:
        return len(self.by_size(size))

    def orthomodular_count(self, size: int) -> int:
        return sum(1 for c in self.by_size(size) if c.orthomodular)

    def lattices(self) -> list[OrthoLattice]:
        return [c.lattice for c in self.classes]


def _antichains(up: tuple[int, ...], down: tuple[int, ...]):
    """Nonempty antichain masks of the poset, ascending by member index."""
    n = len(up)
    full = (1 << n) - 1
    incomparable = [~(up[i] | down[i]) & full for i in range(n)]
    out: list[int] = []

    def rec(allowed: int, chosen: int):
        rest = allowed
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            out.append(chosen | low)
            rec(allowed & incomparable[j] & ~((low << 1) - 1), chosen | low)

    rec(full, 0)
    return out


def _down_masks(up: tuple[int, ...]) -> list[int]:
    down = [0] * len(up)
    for i in range(len(up)):
        for j in bits(up[i]):
            down[j] |= 1 << i
    return down


def _grow_state(up: tuple[int, ...]):
    """All one-element extensions of a state, canonically relabeled.

    Returns (list of (form, canonical up-masks), work units spent).
    """
    k = len(up)
    down = _down_masks(up)
    up_set = set(up)
    results = []
    units = 0
    for antichain in _antichains(up, tuple(down)):
        units += 1
        up_z = 0
        for a in bits(antichain):
            up_z |= up[a]
        if any((up_z & up[x]) not in up_set for x in range(k)):
            continue
        new_up = up + (up_z | 1 << k,)
        units += 1
        form, order = canonical_encoding(k + 1, new_up)
        pos = {e: p for p, e in enumerate(order)}
        canon_up = [0] * (k + 1)
        for old in range(k + 1):
            mask = 0
            for f in bits(new_up[old]):
                mask |= 1 << pos[f]
            canon_up[pos[old]] = mask
        results.append((form, tuple(canon_up)))
    return results, units


def _orthos_for_state(up: tuple[int, ...]):
    """Ortholattices on state + bottom, canonically relabeled and deduped.

    Returns (list of (form, up-masks, perp), work units spent).
    """
    s = len(up)
    n = s + 1
    full = (1 << n) - 1
    up2 = up + (full,)
    down2 = _down_masks(up2)
    bottom = s
    top = next(i for i in range(n) if up2[i] == 1 << i)
    down_index = {down2[i]: i for i in range(n)}
    up_index = {up2[i]: i for i in range(n)}

    units = 0
    complements = []
    for x in range(n):
        cands = []
        for y in range(n):
            if y == x:
                continue
            if down_index[down2[x] & down2[y]] == bottom and up_index[up2[x] & up2[y]] == top:
                cands.append(y)
        complements.append(cands)

    found: dict[bytes, tuple] = {}
    perp = [-1] * n
    perp[bottom], perp[top] = top, bottom
    order = [x for x in range(n) if x not in (bottom, top)]

    def assign(i: int):
        nonlocal units
        units += 1
        while i < len(order) and perp[order[i]] >= 0:
            i += 1
        if i == len(order):
            form, elems = canonical_encoding(n, up2, tuple(perp))
            pos = {e: p for p, e in enumerate(elems)}
            canon_up = [0] * n
            canon_perp = [0] * n
            for old in range(n):
                mask = 0
                for f in bits(up2[old]):
                    mask |= 1 << pos[f]
                canon_up[pos[old]] = mask
                canon_perp[pos[old]] = pos[perp[old]]
            found.setdefault(form, (tuple(canon_up), tuple(canon_perp)))
            return
        x = order[i]
        for y in complements[x]:
            if perp[y] >= 0:
                continue
            ok = True
            for u in range(n):
                v = perp[u]
                if v < 0 or u in (x, y):
                    continue
                if (up2[x] >> u & 1) != (up2[v] >> y & 1) or (up2[u] >> x & 1) != (up2[y] >> v & 1):
                    ok = False
                    break
            if ok:
                perp[x], perp[y] = y, x
                assign(i + 1)
                perp[x] = perp[y] = -1

    assign(0)
    return [(form, masks, perp_) for form, (masks, perp_) in sorted(found.items())], units


def _materialize(form: bytes, masks: tuple[int, ...], perp: tuple[int, ...]) -> EnumeratedClass:
    lat = lattice_from_poset(poset_from_masks(len(masks), masks))
    ortho = attach_ortho(lat, perp)
    return EnumeratedClass(len(masks), form, ortho, not defect_pairs(ortho))


def enumerate_ortholattices(
    max_n: int,
    orthomodular_only: bool = False,
    jobs: int = 1,
    budget: int = DEFAULT_WORK_BUDGET,
) -> EnumerationSummary:
    """One representative per ortho-isomorphism class for every even size
    up to max_n (hard cap 14).

    Raises SizeCapError outside [2, 14] and BudgetExceeded (carrying the
    partial summary over fully completed sizes) when the work budget runs
    out.
    """
    if not 2 <= max_n <= SIZE_CAP:
        raise SizeCapError(f"max size must be in [2, {SIZE_CAP}], got {max_n}")

    def run_tasks(fn, tasks):
        if jobs > 1 and len(tasks) > 1:
            with multiprocessing.get_context("fork").Pool(jobs) as pool:
                return pool.map(fn, tasks)
        return [fn(t) for t in tasks]

    classes: list[EnumeratedClass] = []
    completed: list[int] = []
    used = 0
    states: list[tuple[int, ...]] = [(1,)]

    def partial() -> EnumerationSummary:
        done = tuple(completed)
        kept = tuple(c for c in classes if c.size in done)
        return EnumerationSummary(max_n, kept, False, done)

    for state_size in range(1, max_n):
        final = state_size + 1
        if final % 2 == 0:
            batch = run_tasks(_orthos_for_state, states)
            merged: dict[bytes, tuple] = {}
            for found, units in batch:
                used += units
                for form, masks, perp in found:
                    merged.setdefault(form, (masks, perp))
            if used > budget:
                raise BudgetExceeded(
                    f"enumeration budget exhausted while classifying size {final}",
                    partial())
            for form in sorted(merged):
                masks, perp = merged[form]
                cls = _materialize(form, masks, perp)
                if not orthomodular_only or cls.orthomodular:
                    classes.append(cls)
            completed.append(final)
        if final == max_n:
            break
        grown = run_tasks(_grow_state, states)
        next_states: dict[bytes, tuple[int, ...]] = {}
        for results, units in grown:
            used += units
            for form, masks in results:
                next_states.setdefault(form, masks)
        if used > budget:
            raise BudgetExceeded(
                f"enumeration budget exhausted while growing to size {state_size + 2}",
                partial())
        states = [next_states[f] for f in sorted(next_states)]

    classes.sort(key=lambda c: (c.size, c.form))
    return EnumerationSummary(max_n, tuple(classes), True, tuple(completed))


def has_benzene_subalgebra(L: OrthoLattice) -> bool:
    """Detect a six-element sub-ortholattice shaped like the benzene ring:
    {0, x, y, x', y', 1} closed under the operations, with 0 < x < y < 1
    on one side, the complements on the other, and no comparabilities
    across the sides."""
    n, bottom, top = L.n, L.bottom, L.top
    up = L.poset.up
    meet, join, perp = L.lattice.meet_table, L.lattice.join_table, L.perp

    def comparable(u: int, v: int) -> bool:
        return bool(up[u] >> v & 1 or up[v] >> u & 1)

    for x in range(n):
        for y in range(n):
            if x == y or not up[x] >> y & 1:
                continue
            sub = (bottom, x, y, perp[x], perp[y], top)
            if len(set(sub)) != 6:
                continue
            if any(comparable(u, v) for u in (x, y) for v in (perp[x], perp[y])):
                continue
            subset = set(sub)
            if all(meet[u][v] in subset and join[u][v] in subset
                   for u in sub for v in sub):
                return True
    return False


def cross_validate(corpus) -> PropertyReport:
    """Check every lattice of the corpus against every structural signal.

    Divergence witnesses are (corpus index, check tag, lattice dump)
    triples; the verdict is true exactly when no lattice diverges on any
    of: orthomodularity-versus-defect-pairs agreement, the universal
    lattice inequality, the defect construction, the order-implies-
    compatibility correspondence, benzene-subalgebra presence, and the
    even-size / fixed-point-free shape of the complement map.
    """
    from .olf import export_olf

    bad = []
    for idx, L in enumerate(corpus):
        def flag(tag: str):
            bad.append((idx, tag, export_olf(L)))

        oml = check_orthomodular(L).verdict
        if oml != (not defect_pairs(L)):
            flag("defect-pairs-vs-orthomodular")
        if not check_modular_inequality(L).verdict:
            flag("modular-inequality")
        if not check_defect_construction(L).verdict:
            flag("defect-construction")
        if check_order_implies_compat(L).verdict != oml:
            flag("compatibility-vs-orthomodular")
        if has_benzene_subalgebra(L) == oml:
            flag("benzene-vs-orthomodular")
        if L.n >= 2 and (L.n % 2 or any(L.perp[x] == x for x in range(L.n))):
            flag("shape")
    return PropertyReport("cross-validation", not bad, tuple(bad))
