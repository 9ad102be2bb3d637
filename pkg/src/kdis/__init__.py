"""Counting and bounding k-dominating independent sets in small graphs."""

from kdis.canon import are_isomorphic, canonical_form, graph_key
from kdis.enumeration import count_mi, enumerate_kdis, is_k_dominating_independent
from kdis.errors import (
    BudgetError,
    ContractError,
    DependencyError,
    DomainError,
    Graph6Error,
    GraphSizeError,
    KdisError,
)
from kdis.graph import FamilyFilter, Graph, VertexSet
from kdis.graph6 import graph6_decode, graph6_encode
from kdis.kernels import BACKEND
from kdis.products import lexicographic_product, lift_kdis, paper_cartesian_product, tensor_product
from kdis.search import compute_m, compute_mi_table, generate_graphs

__version__ = "0.1.0"
