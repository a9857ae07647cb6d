"""Minimal vertex-boundary sets in the planar integer lattice.

Boxes and their excess, the Wang-Wang sequence, minimality and life-cycle
classifiers, the graded graph of minimal sets, and a brute-force oracle.
"""

from .kernels import BACKEND
from .lattice import boundary, boundary_size, closed_neighborhood, is_connected, vertex_set
from .symmetry import are_congruent, canonical_form, canonical_key
from .boxes import (
    Box,
    StandardForm,
    box_boundary_size,
    box_excess,
    box_size,
    box_to_set,
    enclosing_box,
    is_box,
    normalize,
    parse_box,
    standard_box,
    standard_form,
)
from .wangwang import ball, min_size_for_boundary, ww, ww_boundary
from .classify import (
    complement_is_union_of_cones,
    excess_of_set,
    find_forbidden_configuration,
    is_dead,
    is_efficient,
    is_minimal,
    is_mortal,
    is_saturated,
    is_uniquely_minimal,
    minimality_certificate,
)
from .graphmin import (
    build_graph,
    classify_component_of_box,
    components,
    enumerate_minimal_classes,
    isolated_vertices,
)
from .oracle import brute_min_boundary, brute_minimal_classes, verify_characterization

__version__ = "0.1.0"
