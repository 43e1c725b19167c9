import pytest

from choreopy.effects.arity import INT
from choreopy.effects.term import (STARVED, Leaf, Node, bind, interp, observe,
                                   perform, probe, probe_equivalent, pure)
from choreopy.effects.tests.signature import TEST, Ask, Flip, Tell
from choreopy.exceptions import ScriptTypeMismatch, SignatureError
from choreopy.local.value import UNIT, Bool, Int, Str


def add_answers():
    return TEST.perform(Ask()).bind(
        lambda a: TEST.perform(Ask()).bind(
            lambda b: pure(Int(a.i + b.i))))


def test_pure_and_bind():

    # Binding a leaf applies the continuation
    assert bind(pure(Int(1)), lambda x: pure(Int(x.i + 1))) == Leaf(Int(2))

    # Binding a node keeps the operation at the head
    t = bind(perform(Ask()), lambda x: pure(x))
    assert isinstance(t, Node)
    assert t.op == Ask()
    assert t.cont(Int(3)) == Leaf(Int(3))

    # map and then
    assert pure(Int(2)).map(lambda x: Int(x.i * 5)) == Leaf(Int(10))
    assert pure(UNIT).then(pure(Int(7))) == Leaf(Int(7))


def test_signature_membership():

    assert Ask() in TEST
    assert "ask" not in TEST
    assert TEST.arity(Ask()) == INT

    with pytest.raises(SignatureError):
        TEST.perform("ask")

    with pytest.raises(SignatureError):
        TEST.arity(object())


def test_probe():

    t = add_answers()

    # Full script
    result = probe(t, [Int(2), Int(3)])
    assert result.trace == (Ask(), Ask())
    assert result.outcome == Int(5)
    assert not result.starved

    # Script runs out
    result = probe(t, [Int(2)])
    assert result.trace == (Ask(), Ask())
    assert result.starved
    assert result.outcome is STARVED

    # Extra responses are ignored
    assert probe(t, [Int(1), Int(1), Int(9)]).outcome == Int(2)

    # Response outside the arity
    with pytest.raises(ScriptTypeMismatch):
        probe(t, [Str("x")])

    with pytest.raises(ScriptTypeMismatch):
        probe(TEST.perform(Tell(1)), [Bool(True)])


def test_observe():

    t = add_answers()
    observations = observe(t)

    # Two Int responses from the 0..3 probing domain
    assert len(observations) == 16
    trace, outcome = observations[(Int(1), Int(3))]
    assert trace == (Ask(), Ask())
    assert outcome == Int(4)

    # A pure term has a single empty script
    assert observe(pure(Int(0))) == {(): ((), Int(0))}

    # Bounded observation starves deep branches
    bounded = observe(t, max_ops=1)
    assert len(bounded) == 4
    assert all(outcome is STARVED for _, outcome in bounded.values())


def test_probe_equivalent():

    flip = TEST.perform(Flip())

    # Same operations, same outcomes
    t1 = flip.bind(lambda b: pure(Int(1 if b.b else 0)))
    t2 = flip.bind(lambda b: pure(Int(int(b.b))))
    assert probe_equivalent(t1, t2)

    # Different outcome on one branch
    t3 = flip.bind(lambda b: pure(Int(1)))
    assert not probe_equivalent(t1, t3)

    # Different operation payloads
    assert not probe_equivalent(TEST.perform(Tell(1)), TEST.perform(Tell(2)))


def test_interp():

    t = TEST.perform(Tell(3)).then(add_answers())

    # Handler answering every Ask with 2 and counting Tell values
    def run(op, k):
        if isinstance(op, Ask):
            return k(Int(2))
        if isinstance(op, Tell):
            value, told = k(UNIT)
            return value, told + op.value
        return k(Bool(False))

    assert interp(run, lambda a: (a, 0), t) == (Int(4), 3)

    # Counting the operations along the first branch
    def count(op, k):
        return 1 + k(op.arity.domain()[0])

    assert interp(count, lambda a: 0, t) == 3
    assert interp(count, lambda a: 0, pure(Int(1))) == 0
