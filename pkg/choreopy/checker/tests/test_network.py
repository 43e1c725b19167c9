import pytest

from choreopy.checker.network import (LocalStep, NetworkState, RecvStep,
                                      SendStep, TypeMismatchAtRecv,
                                      Undelivered, WaitingOn, step_network,
                                      stuck_causes)
from choreopy.effects.arity import INT
from choreopy.effects.term import pure
from choreopy.exceptions import LocalEvaluationError
from choreopy.local.lang import Lit, PrimApp, default_registry
from choreopy.local.value import UNIT, Int, Str
from choreopy.process.process import locally, recv, send

REG = default_registry()


def test_finished_network_is_terminal():

    st = NetworkState.initial({"A": pure(UNIT), "B": pure(Int(1))})

    assert st.finished
    assert st.terminal
    assert step_network(st, REG) == []
    assert stuck_causes(st) == []


def test_steps_are_ordered_by_location():

    st = NetworkState.initial({
        "B": locally(Lit(Int(2))),
        "A": locally(PrimApp("show", (Lit(Int(1)),))),
    })

    (step_a, next_a), (step_b, _) = step_network(st, REG)
    assert step_a == LocalStep("A", Int(1))
    assert step_b == LocalStep("B", Int(2))
    assert next_a.observations == {"A": (Int(1),), "B": ()}
    assert next_a.histories == {"A": (Int(1),), "B": ()}

    # The original state is unchanged
    assert st.histories == {"A": (), "B": ()}


def test_send_and_recv():

    st = NetworkState.initial({"A": send("B", Int(5)), "B": recv("A", INT)})

    # B cannot receive before A sends
    (step, st), = step_network(st, REG)
    assert step == SendStep("A", "B", Int(5))
    assert st.buffers == {("A", "B"): (Int(5),)}
    assert st.sent == 1

    (step, st), = step_network(st, REG)
    assert step == RecvStep("B", "A", Int(5))
    assert st.terminal
    assert (st.sent, st.received) == (1, 1)


def test_stuck_causes():

    # Both sides wait on each other
    st = NetworkState.initial({"A": recv("B", INT), "B": recv("A", INT)})
    assert step_network(st, REG) == []
    assert stuck_causes(st) == [WaitingOn("A", "B"), WaitingOn("B", "A")]

    # The head of the buffer has the wrong arity
    st = NetworkState.initial({"A": send("B", Str("a")), "B": recv("A", INT)})
    (_, st), = step_network(st, REG)
    assert step_network(st, REG) == []
    assert stuck_causes(st) == [TypeMismatchAtRecv("B", "A", INT, Str("a"))]

    # Nobody receives the message
    st = NetworkState.initial({"A": send("B", Int(1)), "B": pure(UNIT)})
    (_, st), = step_network(st, REG)
    assert st.finished and not st.terminal
    assert stuck_causes(st) == [Undelivered("A", "B", (Int(1),))]


def test_local_errors_carry_the_location():

    st = NetworkState.initial({"A": locally(PrimApp("nope"))})
    with pytest.raises(LocalEvaluationError) as err:
        step_network(st, REG)
    assert err.value.location == "A"


def test_state_keys():

    st = NetworkState.initial({"A": send("B", Int(5)), "B": recv("A", INT)})
    (_, sent), = step_network(st, REG)
    (_, received), = step_network(sent, REG)

    assert len({st.key(), sent.key(), received.key()}) == 3

    # Empty buffers do not take part in the key
    emptied = NetworkState(received.procs, received.histories, {},
                           received.observations)
    assert emptied.key() == received.key()
