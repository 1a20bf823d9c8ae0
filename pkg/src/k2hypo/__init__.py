"""Exhaustive generation of K2-hypohamiltonian graphs, with construction checks."""

from .graph import Graph, GraphError, graph6_decode, graph6_encode, petersen_graph
from .canonical import are_isomorphic, canonical_form
from .hamiltonicity import (
    find_hamiltonian_cycle,
    is_hamiltonian,
    is_hypohamiltonian,
    is_k2_hamiltonian,
    is_k2_hypohamiltonian,
)
from .generator import GenConfig, generate

__all__ = [
    "Graph",
    "GraphError",
    "graph6_decode",
    "graph6_encode",
    "petersen_graph",
    "are_isomorphic",
    "canonical_form",
    "find_hamiltonian_cycle",
    "is_hamiltonian",
    "is_hypohamiltonian",
    "is_k2_hamiltonian",
    "is_k2_hypohamiltonian",
    "GenConfig",
    "generate",
]
