"""Exact computations for Nichols systems: cyclotomic arithmetic, braid-group
symmetrizers, Nichols components, Shapovalov kernels and Weyl groupoid roots."""

__version__ = "0.1.0"

from .cyclotomic import CycNum, zeta, embed, q_int, q_binom, label_bound
from .dynkin import DynkinDiagram, reflect, cartan_matrix, m_vector
from .groupoid import run_algorithm, roots, hull_lattice_points

__all__ = ["CycNum", "zeta", "embed", "q_int", "q_binom", "label_bound", "DynkinDiagram",
           "reflect", "cartan_matrix", "m_vector", "run_algorithm", "roots",
           "hull_lattice_points", "__version__"]
