import pytest

from choreopy.choreo.located import absent_reads, reset_absent_reads


@pytest.fixture(autouse=True)
def no_absent_reads():
    """Fail any test after which the payload of an absent located value has
    been read"""
    reset_absent_reads()
    yield
    assert absent_reads() == 0, "the payload of an absent value was read"
