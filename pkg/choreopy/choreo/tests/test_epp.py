import itertools
import warnings

import numpy as np
import pytest

from choreopy.checker.generate import gen_program
from choreopy.choreo.choreography import (Choreo, comm, cross_comms, local_at,
                                          locations)
from choreopy.choreo.epp import epp, project_all
from choreopy.choreo.located import ABSENT, Located, Present, located_map
from choreopy.choreo.tests.programs import pipeline
from choreopy.effects.arity import INT
from choreopy.effects.term import Leaf, bind, probe, probe_equivalent
from choreopy.exceptions import MissingLocation
from choreopy.local.lang import Lit, PrimApp
from choreopy.local.value import UNIT, Int
from choreopy.process.process import (Hole, Locally, Recv, Send, locally,
                                      operations, render)

SEVEN = Lit(Int(7))


def single(s, r):
    return Choreo(lambda at: comm(s, r, at.pure(s, SEVEN), INT))


def test_case_table():

    # Target is sender and receiver
    p = epp(single("L", "L"), "L")
    assert operations(p) == (Locally(SEVEN),)
    result = probe(p, [Int(7)])
    assert result.outcome == Located("L", Present(Int(7)))

    # Target is the sender only
    p = epp(single("L", "R"), "L")
    assert operations(p) == (Locally(SEVEN), Send("R", Hole(1)))
    result = probe(p, [Int(7), UNIT])
    assert result.trace == (Locally(SEVEN), Send("R", Int(7)))
    assert result.outcome == Located("R", ABSENT)

    # Target is the receiver only
    p = epp(single("S", "L"), "L")
    assert operations(p) == (Recv("S", INT),)
    assert probe(p, [Int(7)]).outcome == Located("L", Present(Int(7)))

    # Target is not involved
    p = epp(single("S", "R"), "L")
    assert p == Leaf(Located("R", ABSENT))


def test_local_step_projects_to_locally():

    c = Choreo(lambda at: local_at("A", at.pure("A", SEVEN)))
    expected = locally(SEVEN).map(lambda v: Located("A", Present(v)))
    assert probe_equivalent(epp(c, "A"), expected)
    assert operations(epp(c, "B")) == ()


def test_pipeline_projections():

    c = pipeline().to_choreo()

    assert render(epp(c, "Alice")).splitlines() == [
        "locally (input)",
        "locally (let x $1 (f x))",
        "send Bob $2",
        "recv Carol",
        "locally (let w $4 (show w))",
    ]
    assert render(epp(c, "Bob")).splitlines() == [
        "recv Alice",
        "locally (let y $1 (g y))",
        "send Carol $2",
    ]
    assert render(epp(c, "Carol")).splitlines() == [
        "recv Bob",
        "locally (let z $1 (h z))",
        "send Alice $2",
    ]

    # Locations outside the choreography get a pure process
    assert operations(epp(c, "Dave")) == ()


def test_project_all():

    c = pipeline().to_choreo()

    procs = project_all(c, ["Alice", "Bob", "Carol"])
    assert sorted(procs) == ["Alice", "Bob", "Carol"]
    assert [len(operations(procs[loc])) for loc in procs] == [5, 3, 3]

    with pytest.raises(MissingLocation) as err:
        project_all(c, ["Alice", "Bob"])
    assert err.value.missing == ("Carol",)

    with pytest.warns(UserWarning):
        procs = project_all(c, ["Alice", "Bob", "Carol", "Dave"])
    assert operations(procs["Dave"]) == ()

    # An empty choreography projects to pure processes
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        procs = project_all(Choreo.unit(), ["A"])
    assert operations(procs["A"]) == ()


def test_messages_are_complementary():

    for seed in range(50):
        c = gen_program(seed, num_locs=4, depth=6).to_choreo()
        locs = locations(c)
        procs = project_all(c, locs)

        sends = {}
        recvs = {}
        for loc, p in procs.items():
            for op in operations(p):
                if isinstance(op, Send):
                    sends[(loc, op.to)] = sends.get((loc, op.to), 0) + 1
                elif isinstance(op, Recv):
                    recvs[(op.source, loc)] = recvs.get((op.source, loc), 0) + 1

        assert sends == recvs
        assert sum(sends.values()) == cross_comms(c)
        assert all(s != r for s, r in sends)


def test_projection_is_compositional():

    locs = ("A", "B", "C")
    for s1, r1, s2, r2 in itertools.product(locs, repeat=4):

        c1 = Choreo(lambda at, s1=s1, r1=r1: comm(s1, r1,
                                                  at.pure(s1, Lit(Int(2))),
                                                  INT))

        def k(lv, s2=s2, r2=r2):
            def body(at):
                if lv.owner == s2:
                    t = located_map(lv, lambda v: PrimApp(
                        "add", (Lit(v), Lit(Int(1)))))
                else:
                    t = at.pure(s2, Lit(Int(3)))
                return comm(s2, r2, t, INT)
            return Choreo(body)

        for loc in locs + ("D",):
            lhs = epp(c1.bind(k), loc)
            rhs = bind(epp(c1, loc), lambda lv, loc=loc: epp(k(lv), loc))
            assert probe_equivalent(lhs, rhs)


def test_projection_of_split_programs_is_compositional():

    rng = np.random.default_rng(7)
    for seed in range(30):
        program = gen_program(seed, num_locs=4, depth=6)
        i = int(rng.integers(1, len(program.statements)))
        prefix, rest = program.split(i)
        whole = prefix.bind(rest)

        for loc in locations(program.to_choreo()):
            lhs = epp(whole, loc)
            rhs = bind(epp(prefix, loc), lambda r, loc=loc: epp(rest(r), loc))
            assert probe_equivalent(lhs, rhs), (seed, i, loc)
            assert probe_equivalent(lhs, epp(program.to_choreo(), loc))
