"""Sequences of yes-no questions and the relevant-information they carry.

A sequence is relevance preserving when every later question is relevant
with respect to every earlier one; the information it extracts is counted
as one bit per question (the minimal monotone measure). The capacity of a
lattice is the exact maximum length of such a sequence, found by
depth-first search. The bottom element is excluded from sequences: it is
vacuously relevant to everything and would let an answer-free absurd
question inflate the count. The top element is allowed; the search itself
discovers that it can only ever appear first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .checks import defect_pairs
from .errors import BudgetExceeded, RelevanceLost
from .lattice import OrthoLattice

__all__ = [
    "QuestionSequence",
    "CapacityReport",
    "question_sequence",
    "is_relevance_preserving",
    "info_bits",
    "capacity",
    "excess_information_witness",
]

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class QuestionSequence:
    """Ordered distinct nonzero lattice elements, asked one after another."""

    ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)


SequenceLike = Union[QuestionSequence, Sequence[int], Iterable[int]]


def question_sequence(L: OrthoLattice, ids: SequenceLike) -> QuestionSequence:
    """Validate distinctness, range, and absence of bottom."""
    seq = tuple(ids.ids if isinstance(ids, QuestionSequence) else ids)
    for q in seq:
        L.poset.check_index(q)
        if q == L.bottom:
            raise ValueError("the bottom element is not a question")
    if len(set(seq)) != len(seq):
        raise ValueError("questions must be distinct")
    return QuestionSequence(seq)


def is_relevance_preserving(L: OrthoLattice, s: SequenceLike) -> bool:
    """True iff q_j ^ q_i' = 0 for all i < j."""
    seq = question_sequence(L, s).ids
    meet, perp, bottom = L.lattice.meet_table, L.perp, L.bottom
    return all(meet[seq[j]][perp[seq[i]]] == bottom
               for i in range(len(seq))
               for j in range(i + 1, len(seq)))


def info_bits(L: OrthoLattice, s: SequenceLike) -> int:
    """Bits carried by a relevance-preserving sequence: one per question.

    Raises RelevanceLost(i, j) at the first violating pair otherwise.
    """
    seq = question_sequence(L, s).ids
    meet, perp, bottom = L.lattice.meet_table, L.perp, L.bottom
    for i in range(len(seq)):
        pi = perp[seq[i]]
        for j in range(i + 1, len(seq)):
            if meet[seq[j]][pi] != bottom:
                raise RelevanceLost(i, j)
    return len(seq)


@dataclass(frozen=True)
class CapacityReport:
    """Maximum relevant-information count, with one maximizing sequence.

    ``measure`` names the information measure (question count, one bit per
    answered question). ``exact`` is False when the search was truncated by
    a length cap, in which case ``capacity`` is only a lower bound.
    """

    capacity: int
    sequence: QuestionSequence
    exact: bool = True
    measure: str = "question-count"


def capacity(L: OrthoLattice, max_len: int | None = None,
             node_budget: int = DEFAULT_NODE_BUDGET) -> CapacityReport:
    """Exact maximum length of a relevance-preserving sequence.

    Depth-first search over admissible extensions, visiting candidates in
    index order so the reported maximizer is the lexicographically least
    among maximum-length sequences. Raises BudgetExceeded (carrying the
    best report so far, flagged inexact) if the node budget runs out.
    """
    n, bottom = L.n, L.bottom
    meet, perp = L.lattice.meet_table, L.perp
    full = (1 << n) - 1
    # after_mask[q]: elements that stay admissible once q has been asked
    after_mask = []
    for q in range(n):
        pq = perp[q]
        m = 0
        for x in range(n):
            if meet[x][pq] == bottom:
                m |= 1 << x
        after_mask.append(m & ~(1 << q))

    start_allowed = full & ~(1 << bottom)
    best_len = 0
    best_seq: tuple[int, ...] = ()
    nodes = 0
    depth_capped = False

    def dfs(chosen: list[int], allowed: int):
        nonlocal best_len, best_seq, nodes, depth_capped
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(
                "capacity search node budget exceeded",
                CapacityReport(best_len, QuestionSequence(best_seq), exact=False))
        if len(chosen) > best_len:
            best_len = len(chosen)
            best_seq = tuple(chosen)
        if max_len is not None and len(chosen) >= max_len:
            if allowed:
                depth_capped = True
            return
        if len(chosen) + allowed.bit_count() <= best_len:
            return
        rest = allowed
        while rest:
            low = rest & -rest
            q = low.bit_length() - 1
            rest ^= low
            chosen.append(q)
            dfs(chosen, allowed & after_mask[q] & ~low)
            chosen.pop()

    dfs([], start_allowed)
    return CapacityReport(best_len, QuestionSequence(best_seq), exact=not depth_capped)


def excess_information_witness(
    L: OrthoLattice,
) -> tuple[int, int, QuestionSequence] | None:
    """Certificate that more relevant information fits than a maximal pair
    should allow: the least defect pair (a, b) together with the
    relevance-preserving sequence [a, b], whose information count strictly
    exceeds that of [a] alone. None exactly when the lattice is
    orthomodular.
    """
    defects = defect_pairs(L)
    if not defects:
        return None
    a, b = defects[0]
    cert = question_sequence(L, (a, b))
    assert is_relevance_preserving(L, cert)
    return a, b, cert
