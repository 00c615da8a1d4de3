"""Exact-arithmetic toolkit for Dorroh extensions of algebras, coalgebras, bialgebras and Hopf algebras."""

from .fields import GF, Q
from .linalg import Matrix, Subspace
from .structures import Algebra, Bialgebra, Coalgebra, DorrohPair, DorrohPairAlgebras, DorrohPairCoalgebras
from .dorroh import extend, extend_algebra, extend_coalgebra, split_bialgebra_extension
from .hopf import check_bialgebra_conditions, solve_antipode
from .ideals import check_ideal_criteria, decompose_ideal, is_ideal
from .subcoalgebras import check_subcoalgebra_criteria, decompose_subcoalgebra, is_subcoalgebra
from .document import parse_document, serialize_document

__version__ = "0.1.0"

__all__ = [
    "GF", "Q", "Matrix", "Subspace",
    "Algebra", "Bialgebra", "Coalgebra", "DorrohPair", "DorrohPairAlgebras", "DorrohPairCoalgebras",
    "extend", "extend_algebra", "extend_coalgebra", "split_bialgebra_extension",
    "check_bialgebra_conditions", "solve_antipode",
    "check_ideal_criteria", "decompose_ideal", "is_ideal",
    "check_subcoalgebra_criteria", "decompose_subcoalgebra", "is_subcoalgebra",
    "parse_document", "serialize_document",
]
