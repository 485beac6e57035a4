"""Equable parallelograms on the Eisenstein lattice, in exact integer arithmetic."""

from .core import ElepPair, check_sides, metrics, pair_to_params, params_to_pair, rhombus_witness
from .eisenstein import EPoint, LatticeParallelogram, is_equable, norm
from .families import horizontal_family, vertical_side2_family, vertical_side4_family
from .search import realize, scan
from .tree import enumerate_tree, path_to_root

__version__ = "0.1.0"
