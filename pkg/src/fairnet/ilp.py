"""Feasibility search for small bounded integer programs.

Counting formulations elsewhere in the package (leaf-multiset assignment for
star forests, cycle pattern allocation, independent-class label counts) all
reduce to: find integers x within box bounds satisfying linear equalities and
inequalities.  Variables here are few and tightly bounded, so an exact
depth-first search over variables in declaration order, with interval
propagation on every constraint, decides feasibility deterministically and
returns the smallest-first solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import InputError

_RELATIONS = ("=", "<=", ">=")


@dataclass(frozen=True)
class IntVar:
    name: str
    lower: int
    upper: int

    def __post_init__(self):
        if not isinstance(self.lower, int) or not isinstance(self.upper, int):
            raise InputError(f"bounds of {self.name} must be integers")
        if self.upper < self.lower:
            raise InputError(f"empty bound interval for {self.name}")


@dataclass(frozen=True)
class Constraint:
    """coefficients . x  <relation>  rhs"""

    coefficients: tuple[int, ...]
    relation: str
    rhs: int

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise InputError(f"unknown relation {self.relation!r}")


@dataclass(frozen=True)
class IntegerProgram:
    variables: tuple[IntVar, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise InputError("duplicate variable names")
        for c in self.constraints:
            if len(c.coefficients) != len(self.variables):
                raise InputError("constraint width does not match variable count")

    def check(self, assignment: dict[str, int]) -> bool:
        """Re-check an assignment against bounds and every constraint."""
        try:
            xs = [assignment[v.name] for v in self.variables]
        except KeyError:
            return False
        if any(not v.lower <= x <= v.upper for v, x in zip(self.variables, xs)):
            return False
        for c in self.constraints:
            total = sum(a * x for a, x in zip(c.coefficients, xs))
            if c.relation == "=" and total != c.rhs:
                return False
            if c.relation == "<=" and total > c.rhs:
                return False
            if c.relation == ">=" and total < c.rhs:
                return False
        return True


@dataclass(frozen=True)
class IpSolution:
    assignment: dict[str, int] | None

    @property
    def feasible(self) -> bool:
        return self.assignment is not None


def dump_program(program: IntegerProgram) -> str:
    """Line-oriented debug dump: `var <name> <lo> <hi>` then
    `con <c1> <c2> ... <rel> <rhs>` per constraint."""
    lines = [f"var {v.name} {v.lower} {v.upper}" for v in program.variables]
    for c in program.constraints:
        coeffs = " ".join(str(a) for a in c.coefficients)
        lines.append(f"con {coeffs} {c.relation} {c.rhs}".replace("  ", " "))
    return "\n".join(lines) + ("\n" if lines else "")


def solve_feasible(program: IntegerProgram) -> IpSolution:
    """Deterministic feasibility search.

    Variables are assigned in declaration order, values ascending from the
    lower bound, so the first solution found is the lexicographically
    smallest.  After each assignment every constraint is pruned against the
    interval still reachable by its unassigned variables.
    """
    variables = program.variables
    nvars = len(variables)
    constraints = program.constraints

    # residual extremes contributed by variables >= index i, per constraint
    lo_suffix: list[list[int]] = []
    hi_suffix: list[list[int]] = []
    for c in constraints:
        lows = [0] * (nvars + 1)
        highs = [0] * (nvars + 1)
        for i in range(nvars - 1, -1, -1):
            a = c.coefficients[i]
            v = variables[i]
            options = (a * v.lower, a * v.upper)
            lows[i] = lows[i + 1] + min(options)
            highs[i] = highs[i + 1] + max(options)
        lo_suffix.append(lows)
        hi_suffix.append(highs)

    def violates(ci: int, fixed: int, idx: int) -> bool:
        c = constraints[ci]
        reach_lo = fixed + lo_suffix[ci][idx]
        reach_hi = fixed + hi_suffix[ci][idx]
        if c.relation == "=":
            return reach_lo > c.rhs or reach_hi < c.rhs
        if c.relation == "<=":
            return reach_lo > c.rhs
        return reach_hi < c.rhs

    partial = [0] * len(constraints)
    values = [0] * nvars

    def search(idx: int) -> bool:
        if idx == nvars:
            return True
        var = variables[idx]
        for x in range(var.lower, var.upper + 1):
            values[idx] = x
            ok = True
            for ci, c in enumerate(constraints):
                partial[ci] += c.coefficients[idx] * x
                if ok and violates(ci, partial[ci], idx + 1):
                    ok = False
            if ok and search(idx + 1):
                return True
            for ci, c in enumerate(constraints):
                partial[ci] -= c.coefficients[idx] * x
        return False

    for ci in range(len(constraints)):
        if violates(ci, 0, 0):
            return IpSolution(None)
    if search(0):
        solution = {v.name: x for v, x in zip(variables, values)}
        assert program.check(solution)
        return IpSolution(solution)
    return IpSolution(None)
