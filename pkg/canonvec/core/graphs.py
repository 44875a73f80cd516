"""
Unlabeled graphs as canonical 0/1 vectors under the action of S_n on pairs.

Pairs are indexed lexicographically: (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
Canonical vectors depend on that indexing.
"""

from itertools import combinations
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from canonvec import config
from .catalog import symmetric
from .errors import CostBoundExceeded
from .group import PermutationGroup
from .permutation import Permutation, Vector
from .tree import GenerationConfig, Mode, count_canonicals, enumerate_canonicals


def node_pairs(n: int) -> List[Tuple[int, int]]:
    """0-based pairs (i, j), i < j, in lexicographic order."""
    return list(combinations(range(n), 2))


def pair_action_group(n: int) -> PermutationGroup:
    """S_n acting on the n(n-1)/2 unordered pairs by sigma.(i,j) = (sigma(i), sigma(j))."""
    if n < 2:
        raise ValueError(f"the pair action needs at least 2 nodes, got {n}")
    pairs = node_pairs(n)
    index: Dict[Tuple[int, int], int] = {p: k for k, p in enumerate(pairs)}

    def induced(sigma: Permutation) -> Permutation:
        return Permutation(tuple(index[tuple(sorted((sigma(i), sigma(j))))] for i, j in pairs))

    return PermutationGroup(len(pairs), [induced(s) for s in symmetric(n).generators], name=f"pairs{n}")


def _check_nodes(n: int):
    if n > config.graph_nodes():
        raise CostBoundExceeded(f"{n} nodes is above the graph bound {config.graph_nodes()}")


def count_unlabeled_graphs(n: int, jobs: int = 1) -> int:
    if n < 2:
        return 1
    _check_nodes(n)
    return count_canonicals(GenerationConfig(pair_action_group(n), Mode.ALL, max_part=1), jobs=jobs)


def enumerate_graphs(n: int) -> Iterator[Vector]:
    """One canonical edge vector per isomorphism class, by increasing edge count."""
    if n < 2:
        yield ()
        return
    _check_nodes(n)
    yield from enumerate_canonicals(GenerationConfig(pair_action_group(n), Mode.ALL, max_part=1))


def count_multigraphs(n: int, edges: int) -> int:
    """Multigraphs on n unlabeled nodes with `edges` edges, loops excluded."""
    if edges < 0:
        return 0
    if n < 2:
        return 1 if edges == 0 else 0
    _check_nodes(n)
    return count_canonicals(GenerationConfig(pair_action_group(n), Mode.BY_DEGREE, degree=edges))


# --------------------------
# Rendering
# --------------------------

def bitstring(v: Sequence[int]) -> str:
    return "".join(str(x) for x in v)


def edge_list(v: Sequence[int], n: int) -> List[str]:
    """1-based "i-j" edges, repeated by multiplicity."""
    pairs = node_pairs(n)
    if len(v) != len(pairs):
        raise ValueError(f"edge vector of length {len(v)} for {n} nodes")
    return [f"{i + 1}-{j + 1}" for (i, j), m in zip(pairs, v) for _ in range(m)]


def to_networkx(v: Sequence[int], n: int) -> nx.Graph:
    """A networkx graph on nodes 1..n; a MultiGraph when an edge is repeated."""
    graph = nx.MultiGraph() if any(m > 1 for m in v) else nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    for (i, j), m in zip(node_pairs(n), v):
        for _ in range(m):
            graph.add_edge(i + 1, j + 1)
    return graph
