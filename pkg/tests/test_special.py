import random
from collections import Counter

import pytest

from fairnet import (
    Graph,
    InputError,
    LabelMultiset,
    cycle_graph,
    disjoint_union,
    enumerate_boundary_extensions,
    extend_forest,
    path_graph,
    solve_cycle,
    solve_disjoint_stars,
    solve_single_star,
    star_decomposition,
    star_graph,
    verify,
)
from support import brute_force_fair


def S(*values):
    return LabelMultiset.from_iterable(values)


class TestSingleStar:
    def test_fair_star(self):
        out = solve_single_star(3, S(1, 2, 3, 6), 6)
        assert out.fair
        assert out.certificate.labels[0] == 6
        assert verify(star_graph(3), S(1, 2, 3, 6), out.certificate.labels) == 6

    def test_unfair_wrong_total(self):
        assert not solve_single_star(3, S(1, 2, 3, 7), 7).fair

    def test_unfair_missing_center_value(self):
        # total 12 with k 6 but no label 6 to place on the center
        assert not solve_single_star(3, S(1, 2, 4, 5), 6).fair

    def test_k2_both_equal(self):
        out = solve_single_star(1, S(2, 2), 2)
        assert out.fair and out.certificate.labels == (2, 2)

    def test_input_errors(self):
        with pytest.raises(InputError):
            solve_single_star(0, S(1), 1)
        with pytest.raises(InputError):
            solve_single_star(2, S(1, 2), 3)
        with pytest.raises(InputError):
            solve_single_star(2, S(1, 2, 3), 0)


class TestCycle:
    def test_plain_cycle_all_half(self):
        out = solve_cycle(5, S(2, 2, 2, 2, 2), 4)
        assert out.fair and out.certificate.labels == (2, 2, 2, 2, 2)

    def test_plain_cycle_rejects_mixed(self):
        assert not solve_cycle(6, S(1, 2, 3, 1, 2, 3), 4).fair

    def test_plain_cycle_rejects_odd_constant(self):
        assert not solve_cycle(5, S(2, 2, 2, 2, 2), 5).fair

    def test_period4_pattern(self):
        out = solve_cycle(4, S(1, 1, 2, 2), 3)
        assert out.fair
        assert verify(cycle_graph(4), S(1, 1, 2, 2), out.certificate.labels) == 3

    def test_period4_longer(self):
        out = solve_cycle(8, S(1, 1, 2, 2, 3, 3, 4, 4), 5)
        assert out.fair
        assert verify(cycle_graph(8), S(1, 1, 2, 2, 3, 3, 4, 4), out.certificate.labels) == 5

    def test_period4_infeasible_counts(self):
        assert not solve_cycle(4, S(1, 1, 1, 2), 3).fair

    def test_matches_brute_force(self):
        rng = random.Random(3)
        for _ in range(120):
            length = rng.randint(3, 7)
            labels = S(*(rng.randint(1, 4) for _ in range(length)))
            graph = cycle_graph(length)
            fair, constants = brute_force_fair(graph, labels)
            total = 2 * labels.total()
            if total % length != 0:
                assert not fair
                continue
            k = total // length
            out = solve_cycle(length, labels, k)
            assert out.fair == fair
            if out.fair:
                assert verify(graph, labels, out.certificate.labels) == k


class TestStarDecomposition:
    def test_two_stars(self):
        g = disjoint_union(star_graph(3), star_graph(1))
        assert star_decomposition(g) == [(0, (1, 2, 3)), (4, (5,))]

    def test_k2_center_ties_to_lower_id(self):
        assert star_decomposition(path_graph(2)) == [(0, (1,))]

    def test_rejects_non_star(self):
        with pytest.raises(InputError):
            star_decomposition(path_graph(4))
        with pytest.raises(InputError):
            star_decomposition(disjoint_union(star_graph(2), cycle_graph(3)))
        with pytest.raises(InputError):
            star_decomposition(Graph.from_edges(3, [(0, 1)]))


class TestDisjointStars:
    def test_two_stars_fair(self):
        g = disjoint_union(star_graph(3), star_graph(3))
        labels = S(1, 2, 3, 1, 2, 3, 6, 6)
        out = solve_disjoint_stars(g, labels, 6)
        assert out.fair
        assert verify(g, labels, out.certificate.labels) == 6

    def test_not_enough_center_copies(self):
        g = disjoint_union(star_graph(3), star_graph(3))
        assert not solve_disjoint_stars(g, S(1, 2, 3, 2, 2, 2, 6, 6), 7).fair

    def test_mixed_sizes(self):
        g = disjoint_union(star_graph(1), star_graph(2))
        # centers need two 4s; leaves: {4} and {1, 3}
        labels = S(4, 4, 4, 1, 3)
        out = solve_disjoint_stars(g, labels, 4)
        assert out.fair
        assert verify(g, labels, out.certificate.labels) == 4

    def test_group_split_infeasible(self):
        g = disjoint_union(star_graph(2), star_graph(2))
        # two center 5s; leaves {1, 4, 2, 2}: one pair must sum 5 twice -> 1+4 and 2+... 2+3 missing
        labels = S(5, 5, 1, 4, 2, 2)
        assert not solve_disjoint_stars(g, labels, 5).fair

    def test_counting_matches_brute_force(self):
        rng = random.Random(17)
        for _ in range(80):
            sizes = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
            g = disjoint_union(*(star_graph(s) for s in sizes))
            if g.vertex_count > 8:
                continue
            labels = S(*(rng.randint(1, 5) for _ in range(g.vertex_count)))
            fair, constants = brute_force_fair(g, labels)
            got = {
                k for k in range(1, labels.total() + 1)
                if solve_disjoint_stars(g, labels, k).fair
            }
            assert got == constants

    def test_rejects_non_star_graph(self):
        with pytest.raises(InputError):
            solve_disjoint_stars(cycle_graph(3), S(1, 2, 3), 3)


class TestForestExtension:
    def test_path3_forced_middle(self):
        # whole P3 as the forest: boundary = both leaves, center forced to k
        result = extend_forest(path_graph(3), [0, 1, 2], {0: 2, 2: 2}, 5)
        assert result == {0: 2, 1: 5, 2: 2}

    def test_leaf_with_no_siblings_forced_to_k(self):
        result = extend_forest(path_graph(3), [0, 1, 2], {0: 7, 2: 2}, 5)
        assert result == {0: 7, 1: 5, 2: 2}

    def test_conflicting_children(self):
        # P4 as forest: N(0) forces f(1)=k, N(2) forces f(1)=k-f(3)
        assert extend_forest(path_graph(4), [0, 1, 2, 3], {0: 2, 3: 2}, 5) is None

    def test_root_equation_left_to_callers(self):
        # the recursion never evaluates the root's own equation; boundary
        # values that break only that equation still extend
        result = extend_forest(path_graph(3), [0, 1, 2], {0: 9, 2: 9}, 5)
        assert result == {0: 9, 1: 5, 2: 9}

    def test_forced_nonpositive_rejected(self):
        # P3 forest {0,1,2}; both leaves touch outside 9s, forcing f(1) = 5-9
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)])
        assert extend_forest(g, [0, 1, 2], {0: 1, 2: 1, 3: 9, 4: 9}, 5) is None
        ok = extend_forest(g, [0, 1, 2], {0: 1, 2: 1, 3: 2, 4: 2}, 5)
        assert ok == {0: 1, 1: 3, 2: 1, 3: 2, 4: 2}

    def test_small_tree_equations_checked(self):
        # forest {3,4} is a two-vertex tree: both are boundary, and its full
        # neighborhood equations are enforced directly
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
        assert extend_forest(g, [3, 4], {2: 3, 3: 6, 4: 3}, 6) == {2: 3, 3: 6, 4: 3}
        assert extend_forest(g, [3, 4], {2: 3, 3: 6, 4: 2}, 6) is None

    def test_rejects_cyclic_forest(self):
        with pytest.raises(InputError):
            extend_forest(cycle_graph(3), [0, 1, 2], {}, 4)

    def test_enumeration_superset_of_fair(self):
        rng = random.Random(29)
        for _ in range(40):
            n = rng.randint(4, 7)
            g = Graph.from_edges(
                n,
                [
                    (u, v)
                    for u in range(n)
                    for v in range(u + 1, n)
                    if rng.random() < 0.45
                ],
            )
            if g.min_degree() == 0:
                continue
            labels = S(*(rng.randint(1, 4) for _ in range(n)))
            fair, constants = brute_force_fair(g, labels)
            if not fair or not constants:
                continue
            k = min(constants)
            from fairnet import minimum_feedback_vertex_set

            fvs = minimum_feedback_vertex_set(g)
            forest = [v for v in range(n) if v not in set(fvs)]
            extensions = list(
                enumerate_boundary_extensions(g, forest, labels, k, extra_boundary=fvs)
            )
            # at least one enumerated extension matches each fair labeling's restriction
            assert extensions, "fair instance lost all boundary extensions"
            for ext in extensions:
                usage = Counter(ext.values())
                assert all(labels.multiplicity(v) >= c for v, c in usage.items())
