"""Finite partial orders over dense integer indices.

The order relation is stored row-packed: ``up[i]`` is the bitmask of all j
with i <= j, ``down[i]`` the bitmask of all j <= i. Element count is desk
scale, so quadratic storage is deliberate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CycleError

__all__ = ["FinitePoset", "poset_from_covers"]


@dataclass(frozen=True)
class FinitePoset:
    """Reflexive, antisymmetric, transitive relation on {0, ..., n-1}."""

    n: int
    up: tuple[int, ...] = field(repr=False)
    down: tuple[int, ...] = field(repr=False)
    names: tuple[str, ...] = field(repr=False)

    def leq(self, x: int, y: int) -> bool:
        self.check_index(x)
        self.check_index(y)
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def covers(self) -> list[tuple[int, int]]:
        """All pairs (i, j) with j covering i, in index order."""
        out = []
        for i in range(self.n):
            strict_up = self.up[i] & ~(1 << i)
            for j in bits(strict_up):
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    def check_index(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise IndexError(f"element index {x!r} out of range [0, {self.n})")

    def name_of(self, x: int) -> str:
        self.check_index(x)
        return self.names[x]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None


def bits(mask: int) -> Iterable[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def poset_from_masks(n: int, up: Sequence[int], names: Sequence[str] | None = None) -> FinitePoset:
    """Wrap already-validated up-masks; internal fast path."""
    down = [0] * n
    for i in range(n):
        m = up[i]
        for j in bits(m):
            down[j] |= 1 << i
    return FinitePoset(n, tuple(up), tuple(down),
                       tuple(names) if names is not None else default_names(n))


def poset_from_covers(
    n: int,
    covers: Iterable[tuple[int, int]],
    names: Sequence[str] | None = None,
) -> FinitePoset:
    """Build the poset whose order is the reflexive-transitive closure of
    ``covers`` (each pair (i, j) meaning i <= j).

    Raises CycleError if the closure relates two distinct elements both
    ways, IndexError for out-of-range indices, and ValueError for
    duplicate or degenerate pairs.
    """
    if n < 1:
        raise ValueError("poset needs at least one element")
    cover_list = list(covers)
    seen: set[tuple[int, int]] = set()
    up = [1 << i for i in range(n)]
    for lo, hi in cover_list:
        for v in (lo, hi):
            if not isinstance(v, int) or not 0 <= v < n:
                raise IndexError(f"cover index {v!r} out of range [0, {n})")
        if lo == hi:
            raise ValueError(f"degenerate cover ({lo}, {hi})")
        if (lo, hi) in seen:
            raise ValueError(f"duplicate cover ({lo}, {hi})")
        seen.add((lo, hi))
        up[lo] |= 1 << hi
    # Warshall closure over bitmask rows.
    for k in range(n):
        row_k = up[k]
        bit_k = 1 << k
        for i in range(n):
            if up[i] & bit_k:
                up[i] |= row_k
    for i in range(n):
        for j in bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleError(min(i, j), max(i, j))
    if names is not None:
        names = tuple(names)
        if len(names) != n:
            raise ValueError("names must have one entry per element")
    return poset_from_masks(n, up, names)


def validate_poset(p: FinitePoset) -> None:
    """Re-check the poset axioms; used by tests and file loading."""
    n = p.n
    if len(p.up) != n or len(p.down) != n:
        raise ValueError("mask rows do not match element count")
    full = (1 << n) - 1
    for i in range(n):
        if p.up[i] & ~full:
            raise ValueError(f"up mask of {i} has out-of-range bits")
        if not p.up[i] >> i & 1:
            raise ValueError(f"relation not reflexive at {i}")
    for i in range(n):
        for j in bits(p.up[i]):
            if j != i and p.up[j] >> i & 1:
                raise CycleError(min(i, j), max(i, j))
            if p.up[j] & ~p.up[i]:
                raise ValueError(f"relation not transitive at ({i}, {j})")
            if not p.down[j] >> i & 1:
                raise ValueError("up/down masks disagree")
