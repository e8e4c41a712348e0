"""Finite bounded lattices and orthocomplemented lattices.

Meet and join are precomputed n x n tables; construction rejects posets
that are not lattices, with a witness pair. Orthocomplementations are
validated against the four defining axioms plus a de Morgan audit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import NoBoundsError, NotALattice, OrthoAxiomError
from .poset import FinitePoset, bits

__all__ = [
    "FiniteLattice",
    "OrthoLattice",
    "lattice_from_poset",
    "attach_ortho",
    "atoms",
    "is_atomic",
]


@dataclass(frozen=True)
class FiniteLattice:
    """Bounded lattice: a poset plus exact meet/join tables."""

    poset: FinitePoset
    meet_table: tuple[tuple[int, ...], ...] = field(repr=False)
    join_table: tuple[tuple[int, ...], ...] = field(repr=False)
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    def leq(self, x: int, y: int) -> bool:
        return self.poset.leq(x, y)

    def lt(self, x: int, y: int) -> bool:
        return self.poset.lt(x, y)

    def meet(self, x: int, y: int) -> int:
        self.poset.check_index(x)
        self.poset.check_index(y)
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        self.poset.check_index(x)
        self.poset.check_index(y)
        return self.join_table[x][y]

    def name_of(self, x: int) -> str:
        return self.poset.name_of(x)

    def index_of(self, name: str) -> int:
        return self.poset.index_of(name)


@dataclass(frozen=True)
class OrthoLattice:
    """Finite lattice carrying a validated orthocomplementation."""

    lattice: FiniteLattice
    perp: tuple[int, ...] = field(repr=False)

    @property
    def poset(self) -> FinitePoset:
        return self.lattice.poset

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.lattice.names

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    def leq(self, x: int, y: int) -> bool:
        return self.lattice.leq(x, y)

    def lt(self, x: int, y: int) -> bool:
        return self.lattice.lt(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.lattice.meet(x, y)

    def join(self, x: int, y: int) -> int:
        return self.lattice.join(x, y)

    def ortho(self, x: int) -> int:
        self.poset.check_index(x)
        return self.perp[x]

    def name_of(self, x: int) -> str:
        return self.lattice.name_of(x)

    def index_of(self, name: str) -> int:
        return self.lattice.index_of(name)


Latticelike = Union[FiniteLattice, OrthoLattice]


def as_lattice(L: Latticelike) -> FiniteLattice:
    return L.lattice if isinstance(L, OrthoLattice) else L


def lattice_from_poset(p: FinitePoset) -> FiniteLattice:
    """Fill meet/join tables by exact glb/lub computation.

    The glb of (x, y) exists iff some element's down-set equals
    down(x) & down(y); dually for lub. Raises NoBoundsError when the
    poset lacks a global bottom or top, NotALattice(x, y, reason) when a
    pair has no unique bound.
    """
    n = p.n
    full = (1 << n) - 1
    bottom = top = -1
    for i in range(n):
        if p.up[i] == full:
            bottom = i
        if p.down[i] == full:
            top = i
    if bottom < 0 or top < 0:
        missing = " and ".join(w for w, ok in (("bottom", bottom >= 0), ("top", top >= 0)) if not ok)
        raise NoBoundsError(f"poset has no {missing} element")

    down_index = {p.down[i]: i for i in range(n)}
    up_index = {p.up[i]: i for i in range(n)}
    meet_rows = []
    join_rows = []
    for x in range(n):
        mrow = []
        jrow = []
        for y in range(n):
            m = down_index.get(p.down[x] & p.down[y])
            if m is None:
                raise NotALattice(x, y, "no greatest lower bound")
            j = up_index.get(p.up[x] & p.up[y])
            if j is None:
                raise NotALattice(x, y, "no least upper bound")
            mrow.append(m)
            jrow.append(j)
        meet_rows.append(tuple(mrow))
        join_rows.append(tuple(jrow))
    return FiniteLattice(p, tuple(meet_rows), tuple(join_rows), bottom, top)


def attach_ortho(L: FiniteLattice, ortho: Sequence[int]) -> OrthoLattice:
    """Validate ``ortho`` as an orthocomplementation of L and attach it.

    Checks, in order: (a) involution, (b) order reversal, (c) meet with
    the complement is bottom, (d) join with the complement is top; then
    audits both de Morgan laws. The first failure raises
    OrthoAxiomError(axiom, witness).
    """
    n = L.n
    perp = tuple(ortho)
    if sorted(perp) != list(range(n)):
        raise ValueError("ortho map must be a permutation of the element indices")
    for x in range(n):
        if perp[perp[x]] != x:
            raise OrthoAxiomError("a", (x,))
    for x in range(n):
        for y in bits(L.poset.up[x]):
            if not L.leq(perp[y], perp[x]):
                raise OrthoAxiomError("b", (x, y))
            if not L.poset.up[perp[y]] >> perp[x] & 1:
                raise OrthoAxiomError("b", (x, y))
    for x in range(n):
        if L.meet(x, perp[x]) != L.bottom:
            raise OrthoAxiomError("c", (x,))
    for x in range(n):
        if L.join(x, perp[x]) != L.top:
            raise OrthoAxiomError("d", (x,))
    for x in range(n):
        for y in range(n):
            if perp[L.join(x, y)] != L.meet(perp[x], perp[y]):
                raise OrthoAxiomError("de-morgan", (x, y))
            if perp[L.meet(x, y)] != L.join(perp[x], perp[y]):
                raise OrthoAxiomError("de-morgan", (x, y))
    return OrthoLattice(L, perp)


def atoms(L: Latticelike) -> set[int]:
    """Elements covering bottom."""
    lat = as_lattice(L)
    p = lat.poset
    b = lat.bottom
    return {i for i in range(p.n)
            if i != b and p.down[i] == (1 << i) | (1 << b)}


def is_atomic(L: Latticelike) -> bool:
    """True iff every nonzero element dominates an atom. Always true for a
    finite lattice; kept as an audit."""
    lat = as_lattice(L)
    atom_mask = 0
    for a in atoms(lat):
        atom_mask |= 1 << a
    p = lat.poset
    return all(p.down[x] & atom_mask
               for x in range(p.n) if x != lat.bottom)
