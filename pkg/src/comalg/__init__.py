"""Exact computational algebra for commutative algebras, defects, sectors and
their fusion, with machine-checked coherence diagrams."""

from .algebra import (
    Algebra,
    AlgebraError,
    AlgebraMorphism,
    MatrixAlgebra,
    Subalgebra,
    center,
    commutant,
    generated_subalgebra,
    opposite,
    tensor_algebras,
    tensor_over_central,
    validate_algebra,
)
from .bimodule import Bimodule, BimoduleMorphism, tensor_over, validate_bimodule
from .catalog import catalog_algebra
from .ccn import (
    Defect,
    Intertwiner,
    Net,
    Sector,
    fuse_defects,
    horizontal_fusion,
    identity_defect,
    make_defect,
    make_net,
    make_sector,
    vertical_fusion,
)
from .coherence import CheckReport, run_suite
from .fusion import fusion_algebra, verify_fusion_theorem
from .linalg import Matrix, QuotientSpace, Subspace

__version__ = "0.1.0"

__all__ = [
    "Algebra", "AlgebraError", "AlgebraMorphism", "Bimodule", "BimoduleMorphism",
    "CheckReport", "Defect", "Intertwiner", "Matrix", "MatrixAlgebra", "Net",
    "QuotientSpace", "Sector", "Subalgebra", "Subspace", "catalog_algebra", "center",
    "commutant", "fuse_defects", "fusion_algebra", "generated_subalgebra",
    "horizontal_fusion", "identity_defect", "make_defect", "make_net", "make_sector",
    "opposite", "run_suite", "tensor_algebras", "tensor_over", "tensor_over_central",
    "validate_algebra", "validate_bimodule", "verify_fusion_theorem", "vertical_fusion",
]
