"""Penrose-transform construction of a complex starting with the Dirac
operator in k variables in dimension 4.

Pipeline: :mod:`~kdirac.hasse` builds the relative Hasse diagram,
:mod:`~kdirac.bgg` labels it with weights, :mod:`~kdirac.pushdown` computes
direct images and assembles the complex, :mod:`~kdirac.dims` gives module
dimensions and :mod:`~kdirac.dirac4` realizes the first operator.
"""

from .bgg import BggDiagram, RowBundle, build_bgg, canonical_seed, row_bundles
from .dims import dim_module, dim_so4, weyl_dim_sl
from .errors import DominanceError, InvalidParameterError, KDiracError, StructuralError, UnsupportedRankError
from .hasse import HasseDiagram, HasseEdge, HasseVertex, build_hasse, inversion_set
from .pushdown import (
    NO_IMAGE,
    ComplexDescriptor,
    DirectImage,
    ModuleDescriptor,
    build_complex,
    closed_descriptor,
    descriptor_from_weight,
    direct_image,
    operator_order,
)
from .weights import (
    ParabolicMarking,
    RootKind,
    RootLabel,
    Weight,
    affine_last_reflection,
    delta,
    fundamental_weight,
    is_dominant,
    root_vector,
)

__version__ = "0.1.0"
