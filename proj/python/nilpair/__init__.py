"""Exact-arithmetic laboratory for nilpotent pairs, dual pairs and excellent
sheets in the classical Lie algebras. Thin re-export of the compiled module."""

try:
    from ._nilpair import (
        NilpairError,
        catalog_json,
        classify,
        classify_fixture,
        dominance_leq,
        enumerate_excellent,
        sheet_section_report,
        tables_check,
        transpose,
        verify_fixture,
        weighted_diagram,
        zero_weight_levi,
    )
except ImportError:  # compiled module on sys.path directly (build tree)
    from _nilpair import (
        NilpairError,
        catalog_json,
        classify,
        classify_fixture,
        dominance_leq,
        enumerate_excellent,
        sheet_section_report,
        tables_check,
        transpose,
        verify_fixture,
        weighted_diagram,
        zero_weight_levi,
    )

__all__ = [
    "NilpairError",
    "catalog_json",
    "classify",
    "classify_fixture",
    "dominance_leq",
    "enumerate_excellent",
    "sheet_section_report",
    "tables_check",
    "transpose",
    "verify_fixture",
    "weighted_diagram",
    "zero_weight_levi",
]
