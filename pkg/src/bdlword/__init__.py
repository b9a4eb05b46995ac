"""Geometric representations of substitution fixed points and their
bounded distance equivalence to lattices."""

from .bdl import (BdlVerdict, GeometricRepresentation, Growth, ScanReport, Verdict,
                  build_representation, classify, deviation_series, factor_functional_bound_check,
                  fk_build, representation_from_lengths, scan_boundedness, scan_path)
from .fixedpoint import (FixedPointWindow, ParikhPath, Window, generate_window,
                         is_prefix_of_fixed_point, parikh_path)
from .morphimage import (ImageWindow, image_normal_constraints, image_of_fixed_point,
                         image_window, transported_hyperplane)
from .spectral import (CharPoly, EigenClass, ModulusClass, SpectralReport, candidate_normal_space,
                       char_poly, eigen_classify, eigenvector)
from .substitution import (IntMatrix, Morphism, SeedPair, Substitution, apply, compose,
                           find_seed_pairs, incidence_matrix, is_primitive, parse_morphism,
                           parse_substitution)
from .wordcore import Alphabet, FiniteWord, ParikhVector, concat, parikh

__version__ = "0.1.0"
