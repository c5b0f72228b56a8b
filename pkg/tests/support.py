"""Shared test helpers: independent brute-force references and generators.

Everything here is deliberately naive.  The brute forces re-derive answers
from first principles (permutations, subsets, full boxes) so the production
code is checked against something that cannot share its bugs.
"""

from __future__ import annotations

import itertools
import random

from fairnet import (
    Graph,
    LabelMultiset,
    VACUOUS,
    complete_bipartite,
    cycle_graph,
    disjoint_union,
    star_graph,
    verify,
)

BRUTE_N_LIMIT = 8


def brute_force_fair(graph: Graph, labels: LabelMultiset):
    """(fair, constants) by trying every distinct permutation of the labels.

    Encodes the decision semantics: edgeless graphs are fair for every
    multiset, a graph mixing isolated and constrained vertices is fair for
    none (its isolated vertices see 0 while labels are positive).
    `constants` is the set of integer constants over all fair labelings;
    empty for unfair instances and for vacuously fair edgeless graphs.
    """
    n = graph.vertex_count
    assert n <= BRUTE_N_LIMIT, "brute force reference limited to small graphs"
    if graph.is_edgeless():
        return True, set()
    if graph.min_degree() == 0:
        return False, set()
    fair = False
    constants: set[int] = set()
    for perm in set(itertools.permutations(labels.values)):
        result = verify(graph, labels, perm)
        if result is None:
            continue
        fair = True
        if result is not VACUOUS:
            constants.add(result)
    return fair, constants


def _is_acyclic(graph: Graph, removed: frozenset[int]) -> bool:
    kept = [v for v in range(graph.vertex_count) if v not in removed]
    edge_count = 0
    seen: set[int] = set()
    components = 0
    for start in kept:
        if start in seen:
            continue
        components += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for u in graph.neighbors(v):
                if u in removed:
                    continue
                edge_count += 1
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return edge_count // 2 == len(kept) - components


def brute_min_fvs_size(graph: Graph) -> int:
    vertices = range(graph.vertex_count)
    for size in range(graph.vertex_count + 1):
        for subset in itertools.combinations(vertices, size):
            if _is_acyclic(graph, frozenset(subset)):
                return size
    raise AssertionError("unreachable: removing everything is acyclic")


def brute_min_vc_size(graph: Graph) -> int:
    edges = list(graph.edges())
    vertices = range(graph.vertex_count)
    for size in range(graph.vertex_count + 1):
        for subset in itertools.combinations(vertices, size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return size
    raise AssertionError("unreachable: all vertices cover everything")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_labels(
    rng: random.Random, n: int, max_value: int = 6, alpha_cap: int = 4
) -> LabelMultiset:
    distinct = rng.randint(1, min(alpha_cap, max_value, n) if n else 1)
    pool = rng.sample(range(1, max_value + 1), distinct)
    return LabelMultiset.from_iterable(rng.choice(pool) for _ in range(n))


def random_instance(
    rng: random.Random, max_n: int = 9, max_value: int = 6
) -> tuple[Graph, LabelMultiset]:
    """Mixed-shape random instance: stars, cycles, bipartite, sparse, dense."""
    shape = rng.randrange(6)
    if shape == 0:
        n = rng.randint(3, max_n)
        graph = cycle_graph(n)
    elif shape == 1:
        leaves = rng.randint(1, max_n - 1)
        graph = star_graph(leaves)
        n = leaves + 1
    elif shape == 2:
        a = rng.randint(1, max_n - 1)
        b = rng.randint(1, max_n - a)
        graph = complete_bipartite(a, b)
        n = a + b
    elif shape == 3 and max_n >= 7:
        sizes = []
        budget = max_n
        while budget >= 2 and len(sizes) < 3:
            leaves = rng.randint(1, min(3, budget - 1))
            sizes.append(leaves)
            budget -= leaves + 1
        graph = disjoint_union(*(star_graph(s) for s in sizes))
        n = graph.vertex_count
    else:
        n = rng.randint(1, max_n)
        graph = random_graph(rng, n, rng.choice((0.2, 0.35, 0.5, 0.75)))
    return graph, random_labels(rng, n, max_value)


def _composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Random positive integers of given count summing to total."""
    assert total >= parts >= 1
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    bounds = [0, *cuts, total]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def constructed_fair(
    rng: random.Random, max_n: int = 9
) -> tuple[Graph, LabelMultiset, tuple[int, ...], int]:
    """A known-fair instance with its certificate labels and constant."""
    kind = rng.randrange(4)
    if kind == 0:
        leaves = rng.randint(2, min(5, max_n - 1))
        values = [rng.randint(1, 4) for _ in range(leaves)]
        k = sum(values)
        assignment = (k, *values)
        return (
            star_graph(leaves),
            LabelMultiset.from_iterable(assignment),
            assignment,
            k,
        )
    if kind == 1:
        length = rng.choice([v for v in (3, 5, 6, 7, 9) if v <= max_n])
        c = rng.randint(1, 5)
        assignment = (c,) * length
        return (
            cycle_graph(length),
            LabelMultiset.from_iterable(assignment),
            assignment,
            2 * c,
        )
    if kind == 2 and max_n >= 4:
        a = rng.randint(1, 3)
        b = rng.randint(1, 3)
        k = a + b + rng.randint(1, 3)
        reps = rng.randint(1, max_n // 4)
        assignment = (a, b, k - a, k - b) * reps
        return (
            cycle_graph(len(assignment)),
            LabelMultiset.from_iterable(assignment),
            assignment,
            k,
        )
    m = rng.randint(1, 3)
    n2 = rng.randint(1, min(4, max_n - m))
    left = [rng.randint(1, 4) for _ in range(m)]
    k = sum(left)
    if k < n2:
        left[0] += n2 - k
        k = sum(left)
    right = _composition(rng, k, n2)
    assignment = (*left, *right)
    return (
        complete_bipartite(m, n2),
        LabelMultiset.from_iterable(assignment),
        assignment,
        k,
    )
