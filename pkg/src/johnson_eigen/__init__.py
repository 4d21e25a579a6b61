"""Exact orthogonal eigenbasis and eigenspace projections for Johnson graphs."""
from .coefficients import coefficient_vector, extract_coefficient
from .engine import RunConfig, run_basis, run_bench, run_projection
from .lift import EigenVector, eigenvalue, lift, lift_step, make_eigenvector, transpose_lift
from .projection import Decomposition, decompose, norm_squared, project
from .subsetspace import DomainError, enumerate_subsets, rank, unrank
from .topsets import count_predecessors, eigenspace_dimension, enumerate_top_sets, is_top_set

__version__ = "0.1.0"
