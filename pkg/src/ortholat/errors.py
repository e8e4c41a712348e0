"""Exception types shared across the package."""

from __future__ import annotations


class OrtholatError(Exception):
    """Base class for all structured errors raised by this package."""


class CycleError(OrtholatError):
    """Transitive closure of the input relation forces x <= y <= x for x != y."""

    def __init__(self, x: int, y: int):
        self.x, self.y = x, y
        super().__init__(f"elements {x} and {y} are mutually comparable (order cycle)")


class NoBoundsError(OrtholatError):
    """The poset lacks a global bottom or top element."""


class NotALattice(OrtholatError):
    """Some pair of elements has no unique greatest lower / least upper bound."""

    def __init__(self, x: int, y: int, reason: str):
        self.x, self.y, self.reason = x, y, reason
        super().__init__(f"pair ({x}, {y}): {reason}")


class OrthoAxiomError(OrtholatError):
    """An orthocomplementation axiom failed.

    ``axiom`` is one of "a" (involution), "b" (order reversal),
    "c" (meet with complement is bottom), "d" (join with complement is top),
    or "de-morgan" (consistency audit). ``witness`` holds the offending
    element indices. ``line`` is set by the OLF parser when the failure can
    be traced to a declaration line.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...], line: int | None = None):
        self.axiom, self.witness, self.line = axiom, witness, line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"orthocomplementation axiom ({axiom}) fails at {witness}{at}")


class SizeCapError(OrtholatError):
    """A generator or the enumerator was asked for a size outside its cap."""


class IsotropicFormError(OrtholatError):
    """The bilinear form has a nonzero self-orthogonal vector, so no
    orthocomplement exists for the corresponding line."""

    def __init__(self, vector: tuple[int, int]):
        self.vector = vector
        super().__init__(f"form is isotropic: vector {vector} is self-orthogonal")


class AdmissibilityError(OrtholatError):
    """A pasting diagram violates an admissibility rule."""

    def __init__(self, rule: str, blocks: tuple[int, ...]):
        self.rule, self.blocks = rule, blocks
        super().__init__(f"admissibility rule '{rule}' fails on blocks {blocks}")


class InvariantError(OrtholatError):
    """A pasting diagram violates a structural invariant (block sizes, subsets)."""


class ParseError(OrtholatError):
    """Malformed OLF or GDF input."""

    def __init__(self, line: int, reason: str):
        self.line, self.reason = line, reason
        super().__init__(f"line {line}: {reason}")


class RelevanceLost(OrtholatError):
    """A question sequence is not relevance preserving; (i, j) is the first
    pair where the later question is irrelevant with respect to the earlier."""

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"question {j} is irrelevant with respect to question {i}")


class BudgetExceeded(OrtholatError):
    """A search exceeded its node budget. ``partial`` carries the best
    result found so far, explicitly flagged as incomplete."""

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)
