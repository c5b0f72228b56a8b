"""Instance generators built from known hard problems, with YES certificates.

Each generator returns the graph/multiset pair (iterable unpacking) plus a
metadata map that records the construction parameters, so emitted files are
reproducible and decodable.  Small-instance validation oracles for the source
problems live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .build import complete_bipartite, disjoint_union, star_graph
from .model import (
    FairnessCertificate,
    FairnetError,
    Graph,
    InputError,
    LabelMultiset,
    RefusalError,
    verify,
)

BRUTE_3PARTITION_CAP = 12


@dataclass
class GeneratedInstance:
    """Graph and labels plus generator bookkeeping; unpacks as a pair."""

    graph: Graph
    labels: LabelMultiset
    metadata: dict[str, str] = field(default_factory=dict)

    def __iter__(self) -> Iterator:
        yield self.graph
        yield self.labels


@dataclass(frozen=True)
class ThreePartitionInstance:
    """3m positive integers to split into m triples of equal sum."""

    values: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.m < 1:
            raise InputError("need at least one triple")
        if len(self.values) != 3 * self.m:
            raise InputError(
                f"expected {3 * self.m} values for m={self.m}, got {len(self.values)}"
            )
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InputError("values must be positive integers")

    @property
    def target(self) -> int | None:
        """Required triple sum, when it is an integer at all."""
        total = sum(self.values)
        return total // self.m if total % self.m == 0 else None


@dataclass(frozen=True)
class XsatFormula:
    """Positive CNF; the deep shape rules live in validate_xsat.

    Clause membership is stored as sorted tuples of variable indices.  The
    constructor only rejects structurally meaningless input (bad indices);
    size and occurrence-count rules are reported by validate_xsat so callers
    can surface a description instead of an exception.
    """

    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError("formula needs at least one variable")
        norm = []
        for clause in self.clauses:
            members = tuple(sorted(set(clause)))
            for v in members:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
                    raise InputError(f"variable index {v} out of range")
            norm.append(members)
        object.__setattr__(self, "clauses", tuple(norm))


def validate_xsat(phi: XsatFormula) -> str | None:
    """None when the formula has the required shape, else a description."""
    if phi.n % 3 != 0:
        return f"variable count {phi.n} not divisible by 3"
    if len(phi.clauses) != phi.n:
        return f"clause count {len(phi.clauses)} differs from variable count {phi.n}"
    for idx, clause in enumerate(phi.clauses):
        if len(clause) != 3:
            return f"clause {idx} has size {len(clause)}, expected 3"
    occurrences = [0] * phi.n
    for clause in phi.clauses:
        for v in clause:
            occurrences[v] += 1
    for v, count in enumerate(occurrences):
        if count != 3:
            return f"variable {v} occurs {count} times, expected 3"
    return None


@dataclass(frozen=True)
class SemiMagicSpec:
    """Grid dimension and cell entries for the equal-line-sums encoding."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.n < 3:
            raise InputError("grid dimension must be at least 3")
        if len(self.entries) != self.n * self.n:
            raise InputError(f"expected {self.n * self.n} entries")
        for v in self.entries:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InputError("entries must be positive integers")


def _require_divisible(inst: ThreePartitionInstance) -> int:
    target = inst.target
    if target is None:
        raise InputError("value sum is not divisible by the triple count")
    return target


def gen_3partition_k33(inst: ThreePartitionInstance) -> GeneratedInstance:
    """Complete-bipartite encoding: triples become the six side-sets.

    An even number of triples maps each triple to one side of a copy; an odd
    number first lifts every value by one when any value is 1 (an equivalent
    instance), then adds a padding triple {target-2, 1, 1} whose content is
    forced, so the remaining sides decode the original partition.
    """
    _require_divisible(inst)
    values = inst.values
    shift = 0
    if inst.m % 2 == 1 and min(values) <= 1:
        shift = 1
        values = tuple(v + 1 for v in values)
    target = sum(values) // inst.m
    if inst.m % 2 == 0:
        copies = inst.m // 2
        label_values: tuple[int, ...] = values
        case = 1
    else:
        copies = (inst.m + 1) // 2
        label_values = values + (target - 2, 1, 1)
        case = 2
    graph = disjoint_union(*(complete_bipartite(3, 3) for _ in range(copies)))
    metadata = {
        "generator": "3part-k33",
        "w": ",".join(str(v) for v in inst.values),
        "m": str(inst.m),
        "case": str(case),
        "shift": str(shift),
        "k": str(target),
    }
    return GeneratedInstance(graph, LabelMultiset.from_iterable(label_values), metadata)


def gen_3partition_stars(inst: ThreePartitionInstance) -> GeneratedInstance:
    """Star encoding: one star per triple, centers carry the triple sum."""
    target = _require_divisible(inst)
    graph = disjoint_union(*(star_graph(3) for _ in range(inst.m)))
    label_values = inst.values + (target,) * inst.m
    metadata = {
        "generator": "3part-stars",
        "w": ",".join(str(v) for v in inst.values),
        "m": str(inst.m),
        "k": str(target),
    }
    return GeneratedInstance(graph, LabelMultiset.from_iterable(label_values), metadata)


def brute_3partition(
    inst: ThreePartitionInstance,
) -> tuple[bool, tuple[tuple[int, int, int], ...] | None]:
    """Exhaustive partition into equal-sum triples; witness in canonical order.

    Desk-scale validation oracle: refuses beyond 12 values.
    """
    if len(inst.values) > BRUTE_3PARTITION_CAP:
        raise RefusalError(
            f"{len(inst.values)} values exceed the exhaustive cap {BRUTE_3PARTITION_CAP}"
        )
    target = inst.target
    if target is None:
        return False, None
    values = inst.values
    used = [False] * len(values)
    triples: list[tuple[int, int, int]] = []

    def rec() -> bool:
        anchor = next((i for i, u in enumerate(used) if not u), None)
        if anchor is None:
            return True
        used[anchor] = True
        for j in range(anchor + 1, len(values)):
            if used[j] or values[anchor] + values[j] > target:
                continue
            used[j] = True
            want = target - values[anchor] - values[j]
            for l in range(j + 1, len(values)):
                if used[l] or values[l] != want:
                    continue
                used[l] = True
                triples.append((values[anchor], values[j], values[l]))
                if rec():
                    return True
                triples.pop()
                used[l] = False
            used[j] = False
        used[anchor] = False
        return False

    if rec():
        witness = tuple(sorted(tuple(sorted(t)) for t in triples))
        return True, witness
    return False, None


# clause gadget wiring: vertex t of gadget j is _clause_vertex(n, j, t)
def _clause_vertex(n: int, clause_index: int, t: int) -> int:
    return n + 15 * clause_index + (t - 1)


def gen_xsat(phi: XsatFormula) -> GeneratedInstance:
    """One-in-three positive SAT as a 6-regular labeling instance.

    Each clause becomes a 15-vertex gadget; each variable a single vertex
    wired to the two hub vertices of every clause containing it.  The two
    triangles on the upper middle layers are part of the wiring: without
    them those six vertices would have degree 4, and the forced-label
    argument that pins every gadget label to 2 relies on their adjacency.
    A regularity assertion guards the construction.
    """
    problem = validate_xsat(phi)
    if problem is not None:
        raise InputError(problem)
    n = phi.n
    edges: list[tuple[int, int]] = []
    for j in range(n):
        def c(t: int, j: int = j) -> int:
            return _clause_vertex(n, j, t)

        edges.extend((c(1), c(1 + i)) for i in (1, 2, 3))
        edges.extend((c(8), c(8 + i)) for i in (1, 2, 3))
        edges.extend(((c(2), c(3)), (c(3), c(4)), (c(4), c(2))))
        edges.extend(((c(9), c(10)), (c(10), c(11)), (c(11), c(9))))
        edges.extend((c(a), c(b)) for a in (2, 3, 4) for b in (5, 6, 7))
        edges.extend((c(a), c(b)) for a in (9, 10, 11) for b in (12, 13, 14))
        edges.extend((c(15), c(b)) for b in (5, 6, 7, 12, 13, 14))
        edges.extend(((c(5), c(6)), (c(6), c(7)), (c(7), c(5))))
        edges.extend(((c(12), c(13)), (c(13), c(14)), (c(14), c(12))))
    for j, clause in enumerate(phi.clauses):
        for v in clause:
            edges.append((v, _clause_vertex(n, j, 1)))
            edges.append((v, _clause_vertex(n, j, 8)))
    graph = Graph.from_edges(16 * n, edges)
    if graph.regular_degree() != 6:
        raise FairnetError("internal error: construction is not 6-regular")
    label_values = [1] * (2 * n // 3) + [2] * (15 * n) + [4] * (n // 3)
    metadata = {
        "generator": "xsat",
        "n": str(n),
        "clauses": ";".join(",".join(str(v) for v in cl) for cl in phi.clauses),
        "k": "12",
    }
    return GeneratedInstance(graph, LabelMultiset.from_iterable(label_values), metadata)


def certificate_from_xsat_assignment(
    phi: XsatFormula, truth: Sequence[bool]
) -> FairnessCertificate:
    """The constructive labeling for a one-in-three satisfying assignment.

    True variables take 4, false ones 1, every gadget vertex 2; each hub then
    sees {4,1,1,2,2,2} and every other vertex {2x6}, both summing to 12.
    """
    problem = validate_xsat(phi)
    if problem is not None:
        raise InputError(problem)
    if len(truth) != phi.n:
        raise InputError("truth assignment length does not match the variable count")
    for idx, clause in enumerate(phi.clauses):
        true_count = sum(1 for v in clause if truth[v])
        if true_count != 1:
            raise InputError(
                f"clause {idx} has {true_count} true variables, expected exactly 1"
            )
    labels = [4 if truth[v] else 1 for v in range(phi.n)] + [2] * (15 * phi.n)
    return FairnessCertificate(tuple(labels), 12)


def _semimagic_ids(n: int) -> tuple[range, range, range]:
    cells = range(0, n * n)
    rows = range(n * n, n * n + n)
    cols = range(n * n + n, n * n + 2 * n)
    return cells, rows, cols


def gen_semimagic(spec: SemiMagicSpec) -> GeneratedInstance:
    """Equal-line-sums grid as a labeling instance.

    Cell vertices join their row and column vertices; with line vertices
    labeled k-1 and 1 (k the common line sum), every cell sees exactly k and
    every line vertex sees its line's cells.  When the entry sum is not
    divisible by the dimension no assignment works for any added labels
    (cell and line equations force the divisibility), so the instance is
    emitted flagged as necessarily unfair.
    """
    n = spec.n
    total = sum(spec.entries)
    k = total // n
    _, rows, cols = _semimagic_ids(n)
    edges = []
    for i in range(n):
        for j in range(n):
            cell = i * n + j
            edges.append((cell, rows[i]))
            edges.append((cell, cols[j]))
    graph = Graph.from_edges(n * n + 2 * n, edges)
    label_values = spec.entries + (k - 1,) * n + (1,) * n
    metadata = {
        "generator": "semimagic",
        "n": str(n),
        "entries": ",".join(str(v) for v in spec.entries),
        "k": str(k),
    }
    if total % n != 0:
        metadata["necessarily_unfair"] = "true"
        metadata["verdict"] = "unfair"
    return GeneratedInstance(graph, LabelMultiset.from_iterable(label_values), metadata)


def decode_semimagic(
    spec: SemiMagicSpec, cert: FairnessCertificate
) -> tuple[tuple[int, ...], ...]:
    """Grid extraction from a verified certificate of the generated instance.

    Fails unless the certificate verifies, the line vertices carry exactly
    the added pair {k-1, 1} (one value per orientation), and the grid's line
    sums all equal k.
    """
    instance = gen_semimagic(spec)
    n = spec.n
    result = verify(instance.graph, instance.labels, cert.labels)
    if not isinstance(result, int):
        raise InputError("certificate does not verify on the generated instance")
    if cert.constant != result:
        raise InputError(
            f"certificate claims constant {cert.constant} but verifies at {result}"
        )
    k = result
    _, rows, cols = _semimagic_ids(n)
    row_labels = {cert.labels[v] for v in rows}
    col_labels = {cert.labels[v] for v in cols}
    if not (
        (row_labels == {k - 1} and col_labels == {1})
        or (row_labels == {1} and col_labels == {k - 1})
    ):
        raise InputError("line vertices do not carry the added label pair")
    grid = tuple(
        tuple(cert.labels[i * n + j] for j in range(n)) for i in range(n)
    )
    for i, row in enumerate(grid):
        if sum(row) != k:
            raise InputError(f"row {i} sums to {sum(row)}, expected {k}")
    for j in range(n):
        column_sum = sum(grid[i][j] for i in range(n))
        if column_sum != k:
            raise InputError(f"column {j} sums to {column_sum}, expected {k}")
    return grid


def gen_circulant(n: int, r: int) -> Graph:
    """Ring of n seats where everyone faces the r/2 nearest on each side."""
    if n < 1:
        raise InputError("need at least one vertex")
    if r % 2 != 0:
        raise InputError("degree must be even")
    if not 0 <= r < n:
        raise InputError("degree must satisfy 0 <= r < n")
    edges = [
        (v, (v + offset) % n) for v in range(n) for offset in range(1, r // 2 + 1)
    ]
    graph = Graph.from_edges(n, edges)
    if graph.regular_degree() != r:
        raise FairnetError("internal error: construction is not r-regular")
    return graph
