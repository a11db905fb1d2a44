from ._core import (
    ParseError,
    Proof,
    canonicalize,
    closed_form_a,
    extract,
    extraction_agrees,
    generate,
    is_tautology,
    ordering_report,
    parse_tptp,
    recurrence_a,
    refute,
    saturate,
    subsumes,
    to_tptp,
    unfold,
    unify,
)

__all__ = [
    "ParseError",
    "Proof",
    "canonicalize",
    "closed_form_a",
    "extract",
    "extraction_agrees",
    "generate",
    "is_tautology",
    "ordering_report",
    "parse_tptp",
    "recurrence_a",
    "refute",
    "saturate",
    "subsumes",
    "to_tptp",
    "unfold",
    "unify",
]
