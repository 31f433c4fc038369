from itertools import combinations
from typing import Iterable

import networkx as nx
from loguru import logger

from src.core.graph import Graph, is_connected
from src.errors import PathsNotFound, PreconditionError

# Orders up to this size are decided by trying every small cut
EXHAUSTIVE_CUT_ORDER = 12

_SUPER_SOURCE = "source"
_SUPER_SINK = "sink"


def is_k_connected(g: Graph, k: int) -> bool:
    """More than k vertices, connected, and no set of fewer than k vertices disconnects g"""
    if k < 1:
        raise PreconditionError(f"connectivity order must be positive, got {k}")
    n = g.vertex_count
    if n < k + 1 or not is_connected(g):
        return False
    if g.is_complete():
        return True
    if n <= EXHAUSTIVE_CUT_ORDER:
        for size in range(1, k):
            for cut in combinations(range(n), size):
                if not is_connected(g, without=cut):
                    return False
        return True
    return nx.node_connectivity(g.to_networkx()) >= k


def _terminal(nx_graph: nx.Graph, vertices: list[int], label: str):
    if len(vertices) == 1:
        return vertices[0]
    nx_graph.add_node(label)
    nx_graph.add_edges_from((label, v) for v in vertices)
    return label


def disjoint_paths(g: Graph, sources: Iterable[int], sinks: Iterable[int], k: int) -> list[list[int]]:
    """Find k vertex-disjoint paths from `sources` to `sinks` by unit vertex capacity flow

    A singleton source (or sink) set is shared by all paths; otherwise every path
    starts (ends) at its own vertex of the set. Each path runs from a source to a
    sink and has no internal vertex in either set.

    Args:
        g (Graph): Host graph
        sources (Iterable[int]): Source vertices
        sinks (Iterable[int]): Sink vertices, disjoint from sources
        k (int): Number of paths

    Raises:
        PathsNotFound: Fewer than k such paths exist

    Returns:
        list[list[int]]: k vertex lists, each ordered from source to sink
    """
    source_list = sorted(set(sources))
    sink_list = sorted(set(sinks))
    if not source_list or not sink_list:
        raise PreconditionError("disjoint paths need nonempty source and sink sets")
    if set(source_list) & set(sink_list):
        raise PreconditionError("source and sink sets intersect")
    for v in source_list + sink_list:
        g.check_vertex(v)

    nx_graph = g.to_networkx()
    s = _terminal(nx_graph, source_list, _SUPER_SOURCE)
    t = _terminal(nx_graph, sink_list, _SUPER_SINK)

    source_set, sink_set = set(source_list), set(sink_list)
    paths: list[list[int]] = []
    try:
        for raw in nx.node_disjoint_paths(nx_graph, s, t, cutoff=k):
            path = [x for x in raw if x not in (_SUPER_SOURCE, _SUPER_SINK)]
            start = max(i for i, x in enumerate(path) if x in source_set)
            end = next(i for i in range(start, len(path)) if path[i] in sink_set)
            paths.append(path[start:end + 1])
    except nx.NetworkXNoPath:
        pass
    if len(paths) < k:
        raise PathsNotFound(f"only {len(paths)} disjoint paths between {source_list} and {sink_list}, {k} requested")
    logger.trace("Disjoint paths {} -> {}: {}", source_list, sink_list, paths)
    return sorted(paths[:k])
