"""Exact linear relations among powers of theta functions of even lattices."""
from .exactmath import CyclotomicElement, ExactMatrix, matrix_rank, smith_normal_form, solve_left
from .lattice import Lattice, LatticeError
from .p0search import P0SearchError, find_p0
from .relations import find_relations, index_set, n_bound, theta_vector
from .taylor import hat_closure, pkpm, pkpm_definition

__version__ = "0.1.0"

__all__ = [
    "CyclotomicElement", "ExactMatrix", "Lattice", "LatticeError", "P0SearchError", "find_p0",
    "find_relations", "hat_closure", "index_set", "matrix_rank", "n_bound", "pkpm",
    "pkpm_definition", "smith_normal_form", "solve_left", "theta_vector",
]
