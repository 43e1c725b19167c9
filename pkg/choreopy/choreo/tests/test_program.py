import pytest

from choreopy.choreo.choreography import choreo_eval
from choreopy.choreo.program import Program, Statement
from choreopy.effects.arity import ANY, INT, STR
from choreopy.exceptions import OwnershipError, UnboundVariable
from choreopy.local.lang import Lit, PrimApp, Var, default_registry
from choreopy.local.value import UNIT, Int, Str


def test_statements():

    st = Statement("y", "A", "B", PrimApp("add", (Var("x"), Lit(Int(1)))))
    assert str(st) == "y <- A => B <> (add x 1)"
    assert not st.local
    assert str(Statement(None, "A", "A", Var("x"))) == "A |> x"

    # Positions do not take part in equality
    assert st == Statement("y", "A", "B", st.term, position=(3, 1))


def test_arities():

    program = Program([
        Statement("x", "A", "A", Lit(Int(1))),
        Statement("s", "A", "B", Lit(Str("a"))),
        Statement("y", "A", "B", PrimApp("add", (Var("x"), Var("x")))),
        Statement("z", "B", "C", Var("s")),
        Statement(None, "C", "C", PrimApp("pair", (Var("z"), Var("z")))),
    ])
    assert program.arities() == (INT, STR, INT, STR, ANY)

    # An explicit arity wins
    program = Program([Statement("x", "A", "B", Lit(Int(1)), ANY)])
    assert program.arities() == (ANY,)


def test_ownership_is_checked():

    # x lives at B after the first statement
    program = Program([
        Statement("x", "A", "B", Lit(Int(1))),
        Statement("y", "A", "C", Var("x")),
    ])
    with pytest.raises(OwnershipError):
        program.to_choreo()

    program = Program([Statement("y", "A", "B", Var("nope"))])
    with pytest.raises(UnboundVariable):
        program.to_choreo()


def test_to_choreo():

    program = Program([
        Statement("x", "A", "A", Lit(Int(4))),
        Statement("y", "A", "B", PrimApp("mul", (Var("x"), Var("x")))),
        Statement(None, "B", "B", PrimApp("show", (Var("y"),))),
    ], default_registry())

    outcome = choreo_eval(program.to_choreo(), program.registry)
    assert outcome.observations == {"A": (), "B": (Int(16),)}
    assert outcome.result == Int(16)

    # An empty program does nothing and returns unit
    outcome = choreo_eval(Program().to_choreo(), default_registry())
    assert outcome.result == UNIT
    assert outcome.observations == {}


def test_split():

    program = Program([
        Statement("x", "A", "A", Lit(Int(4))),
        Statement("y", "A", "B", PrimApp("mul", (Var("x"), Var("x")))),
        Statement(None, "B", "B", PrimApp("show", (Var("y"),))),
    ], default_registry())
    whole = choreo_eval(program.to_choreo(), program.registry)

    for i in range(4):
        prefix, rest = program.split(i)
        outcome = choreo_eval(prefix.bind(rest), program.registry)
        assert outcome == whole

    # The prefix hands over its bindings and last value
    prefix, _ = program.split(2)
    env, last = choreo_eval(prefix, program.registry).result
    assert sorted(env) == ["x", "y"]
    assert env["y"].owner == "B"
    assert last == env["y"]

    with pytest.raises(IndexError):
        program.split(4)
