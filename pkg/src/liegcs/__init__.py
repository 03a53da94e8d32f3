"""liegcs: exact verification and classification of generalized complex
structures on low-dimensional solvable Lie algebras, built on rational
arithmetic throughout.  See README.md for the CLI and file formats.
"""

from .linalg import Matrix, GaussianRational, rref, pfaffian, Q
from .poly import Polynomial, parse_poly, parse_expr, poly_eval
from .lie import (LieAlgebra, StructureEquations, CotangentAlgebra, Subspace,
                  abelian, validate_algebra, mc_convert, semidirect, cotangent,
                  neutral_gram, ad_invariance_check, characteristic_subspaces,
                  quotient)
from .gcs import (GCSCandidate, VerificationReport, check_orthogonal,
                  check_involution, nijenhuis, gcs_type, verify, lift_complex,
                  lift_symplectic, cybe_check, b_field, i_eigenspace,
                  gcs_from_subalgebra, generalized_kahler_check, symbolic_gcs,
                  symbolic_nijenhuis)
from .cohomology import (CEComplex, ce_differential, betti, betti_vector,
                         closed_two_forms, symplectic_obstruction)

__version__ = "0.1.0"
