"""Constructions, bounds and exact checks for (k,l)-edge-maximal r-uniform
hypergraphs."""

from .bounds import (
    BoundQuery,
    bounds_report,
    g_profile,
    kt_bounds,
    lemma41_counts,
    lower_bound,
    msh_edge_count,
    s_param,
    t_param,
    upper_bound,
)
from .connectivity import high_components, kappa_flow, kappa_oracle
from .constructions import (
    StarLikeSpec,
    build_def5,
    build_lemma41,
    build_msh,
    build_starlike,
)
from .errors import HxError, HypergraphError, OracleCapError, ParameterError, ParseError
from .hypergraph import (
    CutWitness,
    Hypergraph,
    build,
    complement_edges,
    complete,
    cut_value,
    degrees,
    empty,
    induced,
    read_file,
    write_file,
)
from .maximality import greedy_maximalize, is_kl_edge_maximal, property_a
from .normalize import SatelliteSpectrum, apply_op, normalize, spectrum_edges

__version__ = "0.1.0"
