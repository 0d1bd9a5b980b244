"""Exact direction-cover spectra, point-line duality and stab-count counterexamples."""

from ._core import (
    DegenerateInputError,
    DomainError,
    ParseError,
    construct,
    cyclotomic_poly,
    duality_check,
    float_crosscheck,
    incident,
    odd_formula_discrepancy,
    oracle_check,
    oracle_spectrum,
    pinchasi_check,
    polygon_direction_count,
    polygon_spectrum_closed_form,
    polygon_spectrum_enumerated,
    spectrum,
    stab_spectrum,
    verify,
)

__all__ = [
    "DegenerateInputError",
    "DomainError",
    "ParseError",
    "construct",
    "cyclotomic_poly",
    "duality_check",
    "float_crosscheck",
    "incident",
    "odd_formula_discrepancy",
    "oracle_check",
    "oracle_spectrum",
    "pinchasi_check",
    "polygon_direction_count",
    "polygon_spectrum_closed_form",
    "polygon_spectrum_enumerated",
    "spectrum",
    "stab_spectrum",
    "verify",
]
