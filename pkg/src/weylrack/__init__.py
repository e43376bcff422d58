"""Signed permutation groups W(B_n), W(D_n), their conjugation racks and type D witnesses."""

__version__ = "0.1.0"

from .classes import (
    ConjClass,
    all_classes,
    centralizer,
    class_of,
    enumerate_group,
    same_class_oracle,
)
from .core import (
    ClassVerdict,
    GroupKind,
    SignedElem,
    act,
    conjugate,
    element,
    format_element,
    identity,
    inverse,
    multiply,
    parse_element,
    same_class_fast,
    sign_cycle_decompose,
)
from .rack import (
    DecompWitness,
    FiniteRack,
    check_decomposition,
    check_type_d,
    conj_rack,
    is_subrack,
    search_type_d,
    sq,
    sq_closed_form,
)

__all__ = [
    "ClassVerdict",
    "ConjClass",
    "DecompWitness",
    "FiniteRack",
    "GroupKind",
    "SignedElem",
    "act",
    "all_classes",
    "centralizer",
    "check_decomposition",
    "check_type_d",
    "class_of",
    "conj_rack",
    "conjugate",
    "element",
    "enumerate_group",
    "format_element",
    "identity",
    "inverse",
    "is_subrack",
    "multiply",
    "parse_element",
    "same_class_fast",
    "same_class_oracle",
    "search_type_d",
    "sign_cycle_decompose",
    "sq",
    "sq_closed_form",
]
