"""Finite orthocomplemented lattices: exact order queries, law checkers
with counterexample witnesses, question-sequence information dynamics,
named model families, isomorph-free enumeration, and flat file formats."""

from .canon import CanonicalForm, canonical_form, is_isomorphic, relabel
from .checks import (
    PropertyReport,
    check_defect_construction,
    check_distributive,
    check_modular,
    check_modular_inequality,
    check_order_implies_compat,
    check_orthomodular,
    compatible,
    defect_pairs,
)
from .enumeration import (
    EnumeratedClass,
    EnumerationSummary,
    cross_validate,
    enumerate_ortholattices,
    has_benzene_subalgebra,
)
from .errors import (
    AdmissibilityError,
    BudgetExceeded,
    CycleError,
    InvariantError,
    IsotropicFormError,
    NoBoundsError,
    NotALattice,
    OrthoAxiomError,
    OrtholatError,
    ParseError,
    RelevanceLost,
    SizeCapError,
)
from .families import (
    GreechieDiagram,
    diagram_from_blocks,
    gen_boolean,
    gen_mo,
    gen_o6,
    gen_subspace_mo,
    greechie_paste,
)
from .lattice import (
    FiniteLattice,
    OrthoLattice,
    atoms,
    attach_ortho,
    is_atomic,
    lattice_from_poset,
)
from .olf import OlfDocument, export_dot, export_olf, parse_gdf, parse_olf
from .poset import FinitePoset, poset_from_covers
from .questions import (
    CapacityReport,
    QuestionSequence,
    capacity,
    excess_information_witness,
    info_bits,
    is_relevance_preserving,
    question_sequence,
)
from .relevance import (
    is_irrelevant,
    is_relevant,
    relevance_witness,
    strictly_greater_relevant,
)

__all__ = [
    "AdmissibilityError",
    "BudgetExceeded",
    "CanonicalForm",
    "CapacityReport",
    "CycleError",
    "EnumeratedClass",
    "EnumerationSummary",
    "FiniteLattice",
    "FinitePoset",
    "GreechieDiagram",
    "InvariantError",
    "IsotropicFormError",
    "NoBoundsError",
    "NotALattice",
    "OlfDocument",
    "OrthoAxiomError",
    "OrthoLattice",
    "OrtholatError",
    "ParseError",
    "PropertyReport",
    "QuestionSequence",
    "RelevanceLost",
    "SizeCapError",
    "atoms",
    "attach_ortho",
    "canonical_form",
    "capacity",
    "check_defect_construction",
    "check_distributive",
    "check_modular",
    "check_modular_inequality",
    "check_order_implies_compat",
    "check_orthomodular",
    "compatible",
    "cross_validate",
    "defect_pairs",
    "diagram_from_blocks",
    "enumerate_ortholattices",
    "excess_information_witness",
    "export_dot",
    "export_olf",
    "gen_boolean",
    "gen_mo",
    "gen_o6",
    "gen_subspace_mo",
    "greechie_paste",
    "has_benzene_subalgebra",
    "info_bits",
    "is_atomic",
    "is_irrelevant",
    "is_isomorphic",
    "is_relevance_preserving",
    "is_relevant",
    "lattice_from_poset",
    "parse_gdf",
    "parse_olf",
    "poset_from_covers",
    "question_sequence",
    "relabel",
    "relevance_witness",
    "strictly_greater_relevant",
]
