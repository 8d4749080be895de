"""CNF construction: variables, clauses, XOR/AND gadgets, cardinality encodings, DIMACS."""

from .formula import (
    CnfFormula,
    Literal,
    LiteralLike,
    Model,
    add_and_equals,
    add_at_least_one,
    add_at_most_k,
    add_at_most_one,
    add_exactly_one,
    add_implied_xor,
    add_xor_equals,
    name_map_text,
    parse_dimacs,
    to_dimacs,
    to_int,
)

__all__ = [
    "CnfFormula",
    "Literal",
    "LiteralLike",
    "Model",
    "add_and_equals",
    "add_at_least_one",
    "add_at_most_k",
    "add_at_most_one",
    "add_exactly_one",
    "add_implied_xor",
    "add_xor_equals",
    "name_map_text",
    "parse_dimacs",
    "to_dimacs",
    "to_int",
]
