"""Relevance of one yes-no question with respect to another.

Question b is irrelevant with respect to question a when b ^ a' != 0: the
part of b lying under the negation of a would destroy the information a
provided. Relevance is the negation. The relation is directional and is
not symmetrized here.
"""

from __future__ import annotations

from .checks import defect_pairs
from .lattice import OrthoLattice

__all__ = [
    "is_irrelevant",
    "is_relevant",
    "relevance_witness",
    "strictly_greater_relevant",
]


def is_irrelevant(L: OrthoLattice, b: int, a: int) -> bool:
    """True iff b ^ a' != 0."""
    return L.meet(b, L.ortho(a)) != L.bottom


def is_relevant(L: OrthoLattice, b: int, a: int) -> bool:
    return not is_irrelevant(L, b, a)


def relevance_witness(L: OrthoLattice, b: int, a: int) -> int | None:
    """A nonzero c with c <= b and c <= a', or None when no such element
    exists. Existence agrees with is_irrelevant: the meet b ^ a' is itself
    a witness whenever one exists."""
    c = L.meet(b, L.ortho(a))
    return c if c != L.bottom else None


def strictly_greater_relevant(L: OrthoLattice, a: int) -> list[int]:
    """All b > a that are relevant with respect to a, in index order.

    Per-element view of the defect pairs: nonempty for some a exactly when
    the lattice is not orthomodular.
    """
    L.poset.check_index(a)
    return [z for (x, z) in defect_pairs(L) if x == a]
