"""Closed-form solvers for special shapes and forced extension over forests.

Facts used here, all elementary consequences of the equal-neighbor-sum
condition with constant K:

* A star is fair iff K is one of the labels (the center's) and the remaining
  labels sum to K.
* On a cycle whose length is not a multiple of 4, alternating the defining
  equations forces every label to K/2.  When the length is a multiple of 4
  the fair labelings are exactly the period-4 patterns (a, b, K-a, K-b).
* Across a disjoint union of stars, each center takes K and the leaf sets
  partition the remaining labels into groups of prescribed sizes each summing
  to K; existence is a small counting program over distinct label values.
* Inside an induced forest, once the labels of the forest's leaves and of its
  outside neighbors are fixed, every internal label is forced bottom-up: the
  neighborhood equation of a child determines its parent.
"""

from __future__ import annotations

import time
from collections import Counter
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping

from .build import cycle_graph, star_graph
from .ilp import Constraint, IntegerProgram, IntVar, solve_feasible
from .model import (
    FairnetError,
    Graph,
    InputError,
    LabelMultiset,
    SolveOutcome,
    SolveStats,
    certified_outcome,
    require_constant,
)
from .structure import connected_components

PartialAssignment = dict[int, int]


def solve_single_star(leaf_count: int, labels: LabelMultiset, k: int) -> SolveOutcome:
    """Decide fairness of the canonical star (center 0, leaves 1..n)."""
    require_constant(k)
    if leaf_count < 1:
        raise InputError("star needs at least one leaf")
    if len(labels) != leaf_count + 1:
        raise InputError("label count must be leaf count plus one")
    t0 = time.perf_counter()
    stats = SolveStats()
    fair = labels.multiplicity(k) >= 1 and labels.total() - k == k
    stats.elapsed = time.perf_counter() - t0
    if not fair:
        return SolveOutcome.make_unfair(stats)
    rest = labels.remove_copies(k, 1)
    return certified_outcome(star_graph(leaf_count), labels, (k, *rest.values), k, stats)


def _cycle_pattern(length: int, labels: LabelMultiset, k: int) -> tuple[int, int] | None:
    """First (a, b) whose period-4 pattern consumes the multiset exactly."""
    quarter = length // 4
    for a in labels.distinct_values:
        if k - a < 1:
            continue
        for b in labels.distinct_values:
            if b < a or k - b < 1:
                continue
            need = Counter()
            for value in (a, b, k - a, k - b):
                need[value] += quarter
            if need == labels.counts:
                return a, b
    return None


def solve_cycle(length: int, labels: LabelMultiset, k: int) -> SolveOutcome:
    """Decide fairness of the canonical cycle 0-1-...-(n-1)-0."""
    require_constant(k)
    if length < 3:
        raise InputError("cycle needs at least three vertices")
    if len(labels) != length:
        raise InputError("label count must equal the cycle length")
    t0 = time.perf_counter()
    stats = SolveStats()
    if length % 4 != 0:
        half = k // 2
        fair = k % 2 == 0 and labels.counts == Counter({half: length})
        stats.elapsed = time.perf_counter() - t0
        if not fair:
            return SolveOutcome.make_unfair(stats)
        return certified_outcome(cycle_graph(length), labels, (half,) * length, k, stats)
    pattern = _cycle_pattern(length, labels, k)
    stats.elapsed = time.perf_counter() - t0
    if pattern is None:
        return SolveOutcome.make_unfair(stats)
    a, b = pattern
    period = (a, b, k - a, k - b)
    assignment = tuple(period[i % 4] for i in range(length))
    return certified_outcome(cycle_graph(length), labels, assignment, k, stats)


def star_decomposition(graph: Graph) -> list[tuple[int, tuple[int, ...]]]:
    """(center, leaves) per component; input error unless all components are stars."""
    stars = []
    for comp in connected_components(graph):
        if len(comp) < 2:
            raise InputError("isolated vertex is not a star")
        degs = {v: graph.degree(v) for v in comp}
        center = max(comp, key=lambda v: (degs[v], -v))
        leaves = tuple(v for v in comp if v != center)
        if degs[center] != len(leaves) or any(degs[v] != 1 for v in leaves):
            raise InputError("component is not a star")
        stars.append((center, leaves))
    return stars


def solve_disjoint_stars(graph: Graph, labels: LabelMultiset, k: int) -> SolveOutcome:
    """Decide fairness of a disjoint union of stars via a counting program.

    Every center must carry K, so reject unless K has enough copies.  The
    leftover labels must split into one group per star, the group of a star
    with i leaves holding i pairwise-distinct-by-position values summing to K.
    Group *contents* are multisets over distinct leftover values; integer
    variables count how many stars of each size adopt each candidate group.
    """
    require_constant(k)
    n = graph.vertex_count
    if len(labels) != n:
        raise InputError("label multiset size does not match the vertex count")
    stars = star_decomposition(graph)
    t0 = time.perf_counter()
    stats = SolveStats()
    t = len(stars)
    if labels.multiplicity(k) < t:
        stats.elapsed = time.perf_counter() - t0
        return SolveOutcome.make_unfair(stats)
    leftover = labels.remove_copies(k, t)
    by_size: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
    for center, leaves in sorted(stars):
        by_size.setdefault(len(leaves), []).append((center, leaves))
    sizes = sorted(by_size)
    distinct = leftover.distinct_values

    groups: dict[int, list[tuple[int, ...]]] = {}
    for size in sizes:
        found = [
            combo
            for combo in combinations_with_replacement(distinct, size)
            if sum(combo) == k
            and all(leftover.multiplicity(v) >= c for v, c in Counter(combo).items())
        ]
        groups[size] = found

    variables = []
    index: list[tuple[int, tuple[int, ...]]] = []
    for size in sizes:
        for j, combo in enumerate(groups[size]):
            variables.append(IntVar(f"n{size}_{j}", 0, len(by_size[size])))
            index.append((size, combo))
    constraints = []
    for size in sizes:
        coeffs = tuple(1 if sz == size else 0 for sz, _ in index)
        constraints.append(Constraint(coeffs, "=", len(by_size[size])))
    for value in distinct:
        coeffs = tuple(Counter(combo)[value] for _, combo in index)
        constraints.append(Constraint(coeffs, "=", leftover.multiplicity(value)))
    program = IntegerProgram(tuple(variables), tuple(constraints))
    stats.ilp_calls += 1
    solution = solve_feasible(program)
    stats.elapsed = time.perf_counter() - t0
    if not solution.feasible:
        return SolveOutcome.make_unfair(stats)

    assignment = [0] * n
    for size in sizes:
        queue: list[tuple[int, ...]] = []
        for j, combo in enumerate(groups[size]):
            queue.extend([combo] * solution.assignment[f"n{size}_{j}"])
        for (center, leaves), combo in zip(by_size[size], queue):
            assignment[center] = k
            for leaf, value in zip(sorted(leaves), combo):
                assignment[leaf] = value
    return certified_outcome(graph, labels, assignment, k, stats)


class ForestExtender:
    """Precomputed extension plan for an induced forest of a host graph.

    The boundary of the forest F is N(F), the outside neighbors, together
    with the leaves of F (degree <= 1 inside F).  Given labels on the
    boundary and a constant K, all remaining internal labels are forced: in
    each tree, processed away from a deepest level, the neighborhood equation
    of any child w of an internal vertex v reads  label(v) = K - sum of the
    labels of the other neighbors of w, all of which are known by then.
    Conflicting forced values, a non-positive forced value, or a violated
    equation of an all-boundary tree reports inconsistency (None).
    """

    def __init__(self, graph: Graph, forest_vertices: Iterable[int]):
        self.graph = graph
        forest = frozenset(forest_vertices)
        n = graph.vertex_count
        for v in forest:
            if not 0 <= v < n:
                raise InputError(f"forest vertex {v} out of range")
        inner_deg = {
            v: sum(1 for u in graph.adjacency[v] if u in forest) for v in forest
        }
        self.forest = forest
        self.leaves = frozenset(v for v in forest if inner_deg[v] <= 1)
        self.outside_neighbors = frozenset(
            u for v in forest for u in graph.adjacency[v] if u not in forest
        )
        self.boundary = self.leaves | self.outside_neighbors
        self.internal = sorted(forest - self.leaves)

        # per internal vertex, in processing order: for each child w, the
        # neighbors of w other than the vertex itself
        self.plan: list[tuple[int, tuple[tuple[int, ...], ...]]] = []
        # equations over boundary labels only (vertices of size <= 2 trees)
        self.pre_checks: list[tuple[int, ...]] = []
        # root equations, decidable once the plan has forced all internals
        self.post_checks: list[tuple[int, ...]] = []

        seen: set[int] = set()
        for root_candidate in sorted(forest):
            if root_candidate in seen:
                continue
            tree = self._tree_of(root_candidate)
            seen.update(tree)
            internals = [v for v in tree if inner_deg[v] >= 2]
            if not internals:
                if len(tree) > 2:
                    raise FairnetError("internal error: tree without internal vertex")
                self.pre_checks.extend(tuple(graph.adjacency[v]) for v in sorted(tree))
                continue
            root = min(internals)
            self._plan_tree(root, inner_deg)
            self.post_checks.append(tuple(graph.adjacency[root]))

    def _tree_of(self, start: int) -> list[int]:
        tree = [start]
        seen = {start}
        stack = [start]
        edge_count = 0
        while stack:
            v = stack.pop()
            for u in self.graph.adjacency[v]:
                if u not in self.forest:
                    continue
                edge_count += 1
                if u not in seen:
                    seen.add(u)
                    tree.append(u)
                    stack.append(u)
        if edge_count // 2 != len(tree) - 1:
            raise InputError("designated vertices do not induce a forest")
        return sorted(tree)

    def _plan_tree(self, root: int, inner_deg: Mapping[int, int]) -> None:
        parent = {root: -1}
        levels = [[root]]
        while levels[-1]:
            nxt = []
            for v in levels[-1]:
                for u in self.graph.adjacency[v]:
                    if u in self.forest and u not in parent:
                        parent[u] = v
                        nxt.append(u)
            levels.append(nxt)
        levels.pop()
        children: dict[int, list[int]] = {v: [] for v in parent}
        for v, p in parent.items():
            if p >= 0:
                children[p].append(v)
        for level in reversed(levels):
            for v in sorted(level):
                if inner_deg[v] < 2:
                    continue
                entries = tuple(
                    tuple(u for u in self.graph.adjacency[w] if u != v)
                    for w in sorted(children[v])
                )
                self.plan.append((v, entries))

    def run(self, boundary_labels: Mapping[int, int], k: int,
            check_domain: bool = True, check_roots: bool = False) -> PartialAssignment | None:
        """Force the interior labels; None on conflict.

        The recursion itself only checks sibling agreement, positivity, and
        the equations of all-boundary trees.  With check_roots the equations
        of the tree roots (decidable once all interior labels exist) are
        enforced as well, which callers searching for globally fair
        labelings use as an extra sound filter.
        """
        if check_domain and set(boundary_labels) != self.boundary:
            raise InputError("boundary labeling must cover exactly N(F) and the leaves of F")
        result = dict(boundary_labels)
        for nbrs in self.pre_checks:
            if sum(result[u] for u in nbrs) != k:
                return None
        for v, entries in self.plan:
            forced = None
            for others in entries:
                value = k - sum(result[u] for u in others)
                if forced is None:
                    forced = value
                elif value != forced:
                    return None
            if forced is None or forced < 1:
                return None
            result[v] = forced
        if check_roots:
            for nbrs in self.post_checks:
                if sum(result[u] for u in nbrs) != k:
                    return None
        return result


def extend_forest(graph: Graph, forest_vertices: Iterable[int],
                  boundary_labels: Mapping[int, int], k: int) -> PartialAssignment | None:
    """Force the internal labels of an induced forest from its boundary.

    Returns the combined assignment on N(F) and F, or None when the forced
    values conflict, drop to zero or below, or an all-boundary tree violates
    its own neighborhood equations.  The boundary must cover exactly N(F)
    plus the leaves of F.
    """
    require_constant(k)
    return ForestExtender(graph, forest_vertices).run(boundary_labels, k)


def enumerate_boundary_extensions(
    graph: Graph,
    forest_vertices: Iterable[int],
    labels: LabelMultiset,
    k: int,
    extra_boundary: Iterable[int] = (),
) -> Iterator[PartialAssignment]:
    """All label-feasible forced extensions over every boundary assignment.

    Every function from the boundary (optionally widened by extra vertices,
    e.g. a full feedback vertex set) into the distinct label values is tried;
    assignments that extend consistently and whose combined label usage stays
    inside the multiset are yielded in deterministic order.  Restrictions of
    genuine fair labelings always survive, so the stream is a superset of
    those.
    """
    require_constant(k)
    extender = ForestExtender(graph, forest_vertices)
    domain = sorted(extender.boundary | set(extra_boundary))
    for v in domain:
        if not 0 <= v < graph.vertex_count:
            raise InputError(f"boundary vertex {v} out of range")
    distinct = labels.distinct_values
    remaining = Counter(labels.counts)
    chosen: dict[int, int] = {}

    def feasible_result() -> PartialAssignment | None:
        base = {v: chosen[v] for v in extender.boundary}
        extended = extender.run(base, k, check_domain=False, check_roots=True)
        if extended is None:
            return None
        merged = dict(chosen)
        merged.update(extended)
        used = Counter(merged.values())
        if any(labels.multiplicity(v) < c for v, c in used.items()):
            return None
        return merged

    def rec(i: int) -> Iterator[PartialAssignment]:
        if i == len(domain):
            merged = feasible_result()
            if merged is not None:
                yield merged
            return
        v = domain[i]
        for value in distinct:
            if remaining[value] == 0:
                continue
            remaining[value] -= 1
            chosen[v] = value
            yield from rec(i + 1)
            del chosen[v]
            remaining[value] += 1

    yield from rec(0)
