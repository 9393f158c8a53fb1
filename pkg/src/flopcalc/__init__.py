"""flopcalc: exact equivariant calculus for Grassmannian flop kernels.

Character algebra for products of general linear groups, Borel-Weil-Bott
pushforwards, grade-restriction windows, Koszul/Springer resolution tables
with R-charge bookkeeping, term-level convolution cancellation, and bounded
verification of classical invariant-ring generators.
"""

from .bott import BottResult, bott_push, bott_sequence, relative_bott_push
from .characters import (VirtualCharacter, cauchy_exterior, decompose, dualize,
                         exterior_power, schur_dim, standard, symmetric_power,
                         tensor, torus_weights)
from .invariants import (BlockSizeError, PolyRingSpec, generator_set,
                         invariant_dimension, subalgebra_dimension,
                         verify_generators)
from .resolutions import (SpringerBlock, SpringerDatum, build_complex,
                          convolve_and_cancel, find_cancellation, koszul_terms,
                          oc_resolution, oc_weights, plucker_cone_datum,
                          specialize_h, substitute_h, weyman_resolution)
from .terms import BundleTerm, GradedTermList, HTerm
from .windows import (WindowSet, generate, koszul_restriction_weights,
                      membership, oc_tensor_check)

__version__ = "0.1.0"
