"""Spectral characterisations of distance-regular graphs and of their distance-d graphs.

Given a connected regular graph (or just its spectrum and the mean number of
vertices at maximal distance), decide whether it is distance-regular and
whether its distance-d graph has fewer distinct eigenvalues: half-antipodal,
antipodal, bipartite, or strongly regular distance-d graph.
"""

from .classify import Classification, Tolerances, classify, spectrum_only
from .graphcore import (
    Graph,
    distance_graph,
    distance_profile,
    generate_family,
    intersection_array,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .polyengine import predistance_system, spectral_excess
from .spectra import Spectrum, graph_spectrum, load_spectrum_input, make_spectrum
from .theorems import (
    case0_bound,
    equal_pd_condition,
    half_antipodal_check,
    phi_coefficients,
    spectral_excess_check,
    srg_kneser_check,
    theorem1_ratio,
    theorem2_bound,
)

__version__ = "0.1.0"
