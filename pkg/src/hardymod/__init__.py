"""Numerical wandering-subspace computations for Rudin-type submodules
of the two-variable Hardy space."""

from .blaschke import BlaschkePoint, RudinSpec, blaschke_factor, blaschke_product
from .model import (CompressedMatrix, ModelBasis, compressed_matrix_analytic,
                    compressed_matrix_numeric, kernel_dim, model_basis, szego)
from .rudin import (GeneralizedSpec, WanderingReport, generation_defect, report,
                    wandering_dim_formula, wandering_general, wandering_via_blocks,
                    wandering_via_bruteforce)
from .series import Series1, Series2, inner_product, mul, shift_down_1, tensor

__version__ = "0.1.0"
