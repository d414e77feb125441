"""Exact modular Hamiltonian Lie superalgebras over GF(p).

Construct the truncated divided-power/Grassmann superalgebra, the vector
fields on it, the Hamiltonian algebra it carries, and verify by exact
linear algebra that every skew-symmetric super-biderivation of that algebra
is a scalar multiple of the bracket.
"""

from .bidersolve import (BilinearTensor, DegenerateBracketError, LinearMap,
                         NotInnerError, TheoremReport, check_lemma_properties,
                         extract_lambda, inner_biderivation, solve_biderivations,
                         solve_derivations, verify_theorem)
from .fpexact import SparseMatrixFp, binom_mod
from .lsa import (InvariantViolation, SchemaViolation, StructureAlgebra,
                  center, centralizer, derived_subalgebra, from_json_text,
                  jacobi_check, to_json_text)
from .superspace import (Monomial, Space, SuperPolynomial, enumerate_basis,
                         monomial_str, parity_of)
from .weights import (decompose, lemma_weight_report, lemma_weight_space,
                      monomial_weight, torus_basis, weight_of, weight_report)
from .wittham import (Geometry, MixedParityError, VectorField, apply_field,
                      build_h, build_hbar, build_witt_algebra,
                      hamiltonian_field, witt_bracket)

__all__ = [
    "BilinearTensor", "DegenerateBracketError", "Geometry", "InvariantViolation",
    "LinearMap", "MixedParityError", "Monomial", "NotInnerError", "SchemaViolation",
    "Space", "SparseMatrixFp", "StructureAlgebra", "SuperPolynomial", "TheoremReport",
    "VectorField", "apply_field", "binom_mod", "build_h", "build_hbar",
    "build_witt_algebra", "center", "centralizer", "check_lemma_properties",
    "decompose", "derived_subalgebra", "enumerate_basis", "extract_lambda",
    "from_json_text", "hamiltonian_field", "inner_biderivation", "jacobi_check",
    "lemma_weight_report", "lemma_weight_space", "monomial_str", "monomial_weight",
    "parity_of", "solve_biderivations", "solve_derivations", "to_json_text",
    "torus_basis", "verify_theorem", "weight_of", "weight_report", "witt_bracket",
]

__version__ = "0.1.0"
