"""Helmholtzian (edge Hodge Laplacian) spectra of small simple graphs."""

from .graph import (
    Graph,
    OrientedGraph,
    ParseError,
    TriangleSet,
    default_orientation,
    encode_graph6,
    enumerate_all_graphs,
    enumerate_triangles,
    flip_edge,
    parse_edge_list,
    parse_graph6,
    triangle_degrees,
)
from .incidence import (
    ConsistencyError,
    SignedGraph,
    edge_vertex_incidence,
    helmholtzian_direct,
    helmholtzian_product,
    hprime,
    lambda_signed,
    laplacian,
    triangle_edge_incidence,
    triangular_signed,
)
from .jacobi import ConvergenceError, sym_eigenvalues
from .spectra import Spectrum, closed_form_spectrum, group_spectrum

__version__ = "0.1.0"
