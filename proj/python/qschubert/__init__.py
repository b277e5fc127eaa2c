"""Quantum Schubert calculus on complete and partial flag manifolds.

Permutations are given in one-line notation as sequences of ints, shapes as
strings "n1:n2:...:n".
"""

from ._core import (
    ExpansionError,
    Polynomial,
    QuantumClass,
    classical_product,
    divided_difference,
    expand,
    gromov_witten,
    partial_basis,
    partial_gw,
    partial_quantum_product,
    partial_quantum_schubert,
    partial_relations,
    path_poly,
    quantum_e,
    quantum_product,
    quantum_product_multi,
    quantum_schubert,
    relations,
    schubert_poly,
    specialize_classical,
    specialize_quantum,
    suite_names,
    universal_schubert,
    universal_schubert_c,
    verify,
)

__all__ = [
    "ExpansionError",
    "Polynomial",
    "QuantumClass",
    "classical_product",
    "divided_difference",
    "expand",
    "gromov_witten",
    "partial_basis",
    "partial_gw",
    "partial_quantum_product",
    "partial_quantum_schubert",
    "partial_relations",
    "path_poly",
    "quantum_e",
    "quantum_product",
    "quantum_product_multi",
    "quantum_schubert",
    "relations",
    "schubert_poly",
    "specialize_classical",
    "specialize_quantum",
    "suite_names",
    "universal_schubert",
    "universal_schubert_c",
    "verify",
]
