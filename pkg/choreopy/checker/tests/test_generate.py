import pytest

from choreopy.checker.generate import LOCATIONS, gen_choreo, gen_program
from choreopy.choreo.choreography import choreo_eval, locations
from choreopy.local.lang import free_variables


def test_generation_is_reproducible():

    assert gen_program(7).statements == gen_program(7).statements
    assert gen_program(7, 4, 6).statements == gen_program(7, 4, 6).statements

    c = gen_choreo(11, 4, 6)
    assert set(locations(c)) <= set(LOCATIONS)


def test_bounds():

    for num_locs, depth in ((0, 3), (5, 3), (2, 0), (2, 7)):
        with pytest.raises(ValueError):
            gen_program(0, num_locs, depth)


def test_generated_programs_are_well_formed():

    local = comms = 0
    for seed in range(1000):
        program = gen_program(seed, 4, 6)
        assert len(program.statements) == 6
        assert [st.binder for st in program.statements] == [
            f"x{i}" for i in range(6)]

        owners = {}
        for st in program.statements:
            assert st.sender in LOCATIONS and st.receiver in LOCATIONS
            for name in free_variables(st.term):
                assert owners[name] == st.sender
            owners[st.binder] = st.receiver
            if st.local:
                local += 1
            else:
                comms += 1

    assert local > 0 and comms > 0


def test_generated_programs_evaluate():

    for seed in range(100):
        program = gen_program(seed, 3, 5)
        outcome = choreo_eval(program.to_choreo(), program.registry)
        assert set(outcome.observations) == set(
            locations(program.to_choreo()))
