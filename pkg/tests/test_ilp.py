import itertools
import random

import pytest

from fairnet import Constraint, InputError, IntegerProgram, IntVar, solve_feasible
from fairnet.ilp import dump_program


def box_reference(program: IntegerProgram):
    """Full enumeration of the bound box in lexicographic order."""
    ranges = [range(v.lower, v.upper + 1) for v in program.variables]
    names = [v.name for v in program.variables]
    for point in itertools.product(*ranges):
        candidate = dict(zip(names, point))
        if program.check(candidate):
            return candidate
    return None


class TestTypes:
    def test_rejects_inverted_bounds(self):
        with pytest.raises(InputError):
            IntVar("x", 3, 2)

    def test_rejects_bad_relation(self):
        with pytest.raises(InputError):
            Constraint((1,), "<", 3)

    def test_rejects_width_mismatch(self):
        with pytest.raises(InputError):
            IntegerProgram((IntVar("x", 0, 1),), (Constraint((1, 2), "=", 3),))

    def test_rejects_duplicate_names(self):
        with pytest.raises(InputError):
            IntegerProgram((IntVar("x", 0, 1), IntVar("x", 0, 1)), ())

    def test_check(self):
        p = IntegerProgram(
            (IntVar("x", 0, 3), IntVar("y", 0, 3)),
            (Constraint((1, 1), "=", 4), Constraint((1, -1), "<=", 0)),
        )
        assert p.check({"x": 1, "y": 3})
        assert not p.check({"x": 3, "y": 1})
        assert not p.check({"x": 5, "y": -1})
        assert not p.check({"x": 1})


class TestSolve:
    def test_simple_feasible_lex_smallest(self):
        p = IntegerProgram(
            (IntVar("x", 0, 5), IntVar("y", 0, 5)),
            (Constraint((1, 1), "=", 4),),
        )
        sol = solve_feasible(p)
        assert sol.feasible and sol.assignment == {"x": 0, "y": 4}

    def test_infeasible_by_interval(self):
        p = IntegerProgram(
            (IntVar("x", 0, 2), IntVar("y", 0, 2)),
            (Constraint((1, 1), "=", 9),),
        )
        assert not solve_feasible(p).feasible

    def test_unconstrained_returns_lower_corner(self):
        p = IntegerProgram((IntVar("a", 2, 4), IntVar("b", 1, 3)), ())
        assert solve_feasible(p).assignment == {"a": 2, "b": 1}

    def test_negative_coefficients(self):
        p = IntegerProgram(
            (IntVar("x", 0, 6), IntVar("y", 0, 6)),
            (Constraint((2, -1), "=", 3), Constraint((1, 1), ">=", 5)),
        )
        sol = solve_feasible(p)
        assert sol.feasible
        x, y = sol.assignment["x"], sol.assignment["y"]
        assert 2 * x - y == 3 and x + y >= 5

    def test_zero_variables(self):
        assert solve_feasible(IntegerProgram((), ())).feasible

    def test_matches_box_reference(self):
        rng = random.Random(99)
        for _ in range(150):
            nvars = rng.randint(1, 4)
            variables = []
            for i in range(nvars):
                lo = rng.randint(0, 3)
                variables.append(IntVar(f"v{i}", lo, lo + rng.randint(0, 4)))
            constraints = []
            for _ in range(rng.randint(0, 3)):
                coeffs = tuple(rng.randint(-3, 3) for _ in range(nvars))
                relation = rng.choice(("=", "<=", ">="))
                rhs = rng.randint(-6, 14)
                constraints.append(Constraint(coeffs, relation, rhs))
            program = IntegerProgram(tuple(variables), tuple(constraints))
            expected = box_reference(program)
            got = solve_feasible(program)
            assert got.feasible == (expected is not None)
            if expected is not None:
                # identical lexicographically smallest solution
                assert got.assignment == expected


class TestDump:
    def test_dump_format(self):
        p = IntegerProgram(
            (IntVar("x", 0, 2),),
            (Constraint((3,), ">=", 1),),
        )
        assert dump_program(p) == "var x 0 2\ncon 3 >= 1\n"

    def test_dump_empty(self):
        assert dump_program(IntegerProgram((), ())) == ""
