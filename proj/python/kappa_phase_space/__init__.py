"""kappa-deformed phase-space engine.

Exact symbolic arithmetic for the deformed translation Hopf algebra and its
dual position algebra, cross-product (smash) derivation of the four deformed
phase-space algebras, and numerical verification of the deformed uncertainty
relations on a momentum-space grid.
"""

from ._core import (
    DerivedTable,
    Element,
    KappaError,
    act,
    classical_limit,
    commutator,
    commutator_residuals,
    coproduct,
    derive_table,
    fixture_ids,
    normalize,
    pair,
    parse,
    selftest,
    uncertainty_sweep,
)

__all__ = [
    "DerivedTable",
    "Element",
    "KappaError",
    "act",
    "classical_limit",
    "commutator",
    "commutator_residuals",
    "coproduct",
    "derive_table",
    "fixture_ids",
    "normalize",
    "pair",
    "parse",
    "selftest",
    "uncertainty_sweep",
]
