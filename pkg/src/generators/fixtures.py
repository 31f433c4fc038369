import random
from enum import Enum

import networkx as nx
from loguru import logger

from src.config import SolverConfig
from src.core.connectivity import is_k_connected
from src.core.graph import Graph, is_connected, is_eulerian
from src.errors import FixtureBudgetExceeded


class Profile(str, Enum):
    """Hypotheses a random fixture is sampled to satisfy"""
    ConnectedEvenOrder = "connected-even-order"
    EulerianOddOrder = "eulerian-odd-order"
    ThreeConnTwoEven = "3conn-two-even"
    FourConnOddOrder = "4conn-odd-order"
    FourConnOneEven = "4conn-one-even"
    Tree = "tree"


def _gnp(rng: random.Random, orders: list[int], low: float, high: float) -> nx.Graph:
    return nx.gnp_random_graph(rng.choice(orders), rng.uniform(low, high), seed=rng.randrange(2**32))


def _toggle_pairs(nx_graph: nx.Graph, vertices: list[int]) -> None:
    """Flip the edge between consecutive pairs, changing the parity of both ends"""
    for a, b in zip(vertices[::2], vertices[1::2]):
        if nx_graph.has_edge(a, b):
            nx_graph.remove_edge(a, b)
        else:
            nx_graph.add_edge(a, b)


def _tree(rng: random.Random) -> Graph:
    n = rng.randint(2, 12)
    if n == 2:
        return Graph(2, [(0, 1)])
    return Graph.from_networkx(nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)]))


def _connected_even_order(rng: random.Random) -> Graph | None:
    g = Graph.from_networkx(_gnp(rng, [6, 8, 10, 12], 0.25, 0.6))
    return g if is_connected(g) else None


def _eulerian_odd_order(rng: random.Random) -> Graph | None:
    nx_graph = _gnp(rng, [5, 7, 9, 11], 0.3, 0.7)
    _toggle_pairs(nx_graph, sorted(v for v, d in nx_graph.degree() if d % 2))
    g = Graph.from_networkx(nx_graph)
    return g if g.edge_count and is_eulerian(g) else None


def _three_conn_two_even(rng: random.Random) -> Graph | None:
    g = Graph.from_networkx(_gnp(rng, [7, 9, 11], 0.4, 0.8))
    return g if len(g.even_vertices()) >= 2 and is_k_connected(g, 3) else None


def _four_conn_odd_order(rng: random.Random) -> Graph | None:
    g = Graph.from_networkx(_gnp(rng, [7, 9, 11], 0.55, 0.9))
    return g if is_k_connected(g, 4) else None


def _four_conn_one_even(rng: random.Random) -> Graph | None:
    nx_graph = _gnp(rng, [9, 11], 0.55, 0.85)
    n = nx_graph.number_of_nodes()
    evens = sorted(v for v, d in nx_graph.degree() if d % 2 == 0)
    w = next((v for v in evens if nx_graph.degree(v) < n - 1), None)
    if w is None:
        return None
    _toggle_pairs(nx_graph, [v for v in evens if v != w])
    g = Graph.from_networkx(nx_graph)
    if g.even_vertices() != (w,) or g.degree(w) == n - 1:
        return None
    return g if is_k_connected(g, 4) else None


SAMPLERS = {
    Profile.ConnectedEvenOrder: _connected_even_order,
    Profile.EulerianOddOrder: _eulerian_odd_order,
    Profile.ThreeConnTwoEven: _three_conn_two_even,
    Profile.FourConnOddOrder: _four_conn_odd_order,
    Profile.FourConnOneEven: _four_conn_one_even,
}


def random_fixture(profile: Profile | str, seed: int, attempts: int | None = None) -> Graph:
    """Seeded random graph satisfying `profile`, by rejection sampling

    Args:
        profile (Profile | str): Hypotheses to satisfy
        seed (int): Same seed, same graph
        attempts (int | None, optional): Samples drawn before giving up, SolverConfig default when None

    Raises:
        FixtureBudgetExceeded: No sample passed within the attempts

    Returns:
        Graph: The fixture
    """
    profile = Profile(profile)
    rng = random.Random(seed)
    if profile is Profile.Tree:
        return _tree(rng)
    attempts = attempts or SolverConfig().fixture_attempts
    sampler = SAMPLERS[profile]
    for attempt in range(attempts):
        g = sampler(rng)
        if g is not None:
            logger.trace("Fixture {} seed {} accepted after {} samples", profile.value, seed, attempt + 1)
            return g
    raise FixtureBudgetExceeded(f"no {profile.value} fixture within {attempts} samples (seed {seed})")
