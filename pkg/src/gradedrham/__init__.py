"""Exact algebraic de Rham cohomology of weighted-homogeneous algebras over Q.

Three routes are implemented and compared: the completed Amitsur complex of
``Q -> B``, Hartshorne's complex (through its infinitesimal truncations) and
the naive complex of Kahler forms.
"""

from .amitsur import AmitsurEngine, amitsur_cohomology, amitsur_slice
from .compare import Workbench, dimension_report, h1_to_oneform, log_cocycle, naive_class_is_nonzero
from .complexes import CohomologyReport, WeightSliceComplex, assemble, cohomology, cohomology_dims, stabilize
from .derham import (
    DeRhamEngine, hartshorne_cohomology, hartshorne_slice, naive_cohomology, naive_slice,
    presentation_independence_check,
)
from .errors import (
    GradedRhamError, Inconclusive, NonHomogeneousRelation, NotACocycle, NotAComplex, NotInAugmentationIdeal,
    NotStabilized, ParseError, UnitNotInvertible, WeightMismatch, WeightZeroInfinite, WindowTooSmall,
)
from .graded import (
    GradedAlgebra, PieceBasis, WindowPolicy, ideal_power_piece, monomials, multiply, normal_form, piece_basis,
)
from .polynomial import Polynomial, Presentation
from .qlinalg import QMatrix, Rat, kernel_basis, membership, quotient_basis, rank, rref
from .ringfile import parse_polynomial, parse_ring, parse_ring_file, render_ring
from .tensor import aug_power_piece, augmentation_ideal_piece, coface, tensor_piece

__version__ = "0.1.0"
