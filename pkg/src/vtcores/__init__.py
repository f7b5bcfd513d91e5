"""Cores, retractions and core-copy partitions of vertex-transitive graphs."""

from ._backtrack import Budget, BudgetExceeded
from .graphs import Graph, VertexPartition
from .groups import ConnectionSet, FiniteGroup, cayley_graph
from .homs import Homomorphism, Retraction, find_core, find_homomorphism, is_core

__all__ = [
    "Budget",
    "BudgetExceeded",
    "ConnectionSet",
    "FiniteGroup",
    "Graph",
    "Homomorphism",
    "Retraction",
    "VertexPartition",
    "cayley_graph",
    "find_core",
    "find_homomorphism",
    "is_core",
]
