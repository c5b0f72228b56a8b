"""Canonical small-graph constructors shared by solvers, generators and tests."""

from __future__ import annotations

from .model import Graph, InputError


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaf_count: int) -> Graph:
    """Star with center 0 and leaves 1..leaf_count."""
    if leaf_count < 1:
        raise InputError("star needs at least one leaf")
    return Graph.from_edges(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph with sides 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise InputError("both sides need at least one vertex")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    adjacency: list[tuple[int, ...]] = []
    offset = 0
    for g in graphs:
        for nbrs in g.adjacency:
            adjacency.append(tuple(u + offset for u in nbrs))
        offset += g.vertex_count
    return Graph(tuple(adjacency))
