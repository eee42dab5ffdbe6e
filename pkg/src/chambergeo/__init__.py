"""Exact chamber geometry: hyperplane arrangements, root systems, movable
cones with flop graphs, parabolic diagram twists, and the A-type slice family.
"""

from .arrangement import (Arrangement, Chamber, Fan, Hyperplane, WallGraph,
                          build_arrangement, chamber_facets, chambers,
                          fan_of_chambers, is_arrangement_induced, locate,
                          wall_graph)
from .errors import ChamberGeoError
from .movcone import (MovDecomposition, ample_chamber,
                      discriminant_hyperplanes, flop, mov_decomposition,
                      weyl_chamber_action)
from .parabolic import (MarkedDynkin, ParabolicDiagram, levi_subspace,
                        parabolics_with_levi, restricted_arrangement,
                        render_diagram, twist)
from .rootsys import (CartanType, RootSystem, WeylGroup, build_root_system,
                      reflection, weyl_group, weyl_orbit)
from .slices import (SliceFamily, SlicePoint, alpha_map, ample_chamber_rays,
                     elementary_symmetric_coeffs, fiber_is_singular,
                     singularity_types, slice_family, slodowy_h2_type)

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "Chamber", "Fan", "Hyperplane", "WallGraph",
    "build_arrangement", "chamber_facets", "chambers", "fan_of_chambers",
    "is_arrangement_induced", "locate", "wall_graph",
    "ChamberGeoError",
    "MovDecomposition", "ample_chamber", "discriminant_hyperplanes", "flop",
    "mov_decomposition", "weyl_chamber_action",
    "MarkedDynkin", "ParabolicDiagram", "levi_subspace",
    "parabolics_with_levi", "restricted_arrangement", "render_diagram",
    "twist",
    "CartanType", "RootSystem", "WeylGroup", "build_root_system",
    "reflection", "weyl_group", "weyl_orbit",
    "SliceFamily", "SlicePoint", "alpha_map", "ample_chamber_rays",
    "elementary_symmetric_coeffs", "fiber_is_singular", "singularity_types",
    "slice_family", "slodowy_h2_type",
    "__version__",
]
