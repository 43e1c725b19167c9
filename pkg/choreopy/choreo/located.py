""" Located values and their interpretations.

A located value is a value owned by one location. How much of it is visible
depends on the interpretation a choreography is instantiated with:

* ``Focus(l)`` shows values owned by ``l`` and erases every other one to
  ``ABSENT``; endpoint projection uses it.
* ``GlobalView()`` shows every value; the choreographic semantics uses it.

Absent content has no payload. Reading ``ABSENT.value`` anyway returns unit,
and is counted so that tests can assert nothing ever does it.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Any, Union

from choreopy.local.value import UNIT

logger = logging.getLogger(__name__)

_absent_reads = 0
_absent_lock = threading.Lock()


def absent_reads():
    """Number of times the payload of ``ABSENT`` has been read"""
    return _absent_reads


def reset_absent_reads():
    global _absent_reads
    with _absent_lock:
        _absent_reads = 0


@dataclass(frozen=True)
class Present:
    value: Any

    def __str__(self):
        return str(self.value)


class Absent:
    """Erased content of a value owned elsewhere"""

    __slots__ = ()

    @property
    def value(self):
        global _absent_reads
        with _absent_lock:
            _absent_reads += 1
        logger.warning("payload of an absent located value was read")
        return UNIT

    def __repr__(self):
        return "ABSENT"

    __str__ = __repr__


ABSENT = Absent()


@dataclass(frozen=True)
class Located:
    """A value owned by ``owner``, Present or erased"""
    owner: str
    content: Union[Present, Absent]

    @property
    def present(self):
        return isinstance(self.content, Present)

    def __str__(self):
        return f"{self.content}@{self.owner}"


class LocatedView:
    """Base class of located-value interpretations"""

    def owns(self, owner):
        raise NotImplementedError()

    def pure(self, owner, value):
        """Locate ``value`` at ``owner``, erasing it if this view does not
        own it"""
        if self.owns(owner):
            return Located(owner, Present(value))
        return Located(owner, ABSENT)


class Focus(LocatedView):
    """The view of a single location

    ``Focus(None)`` owns nothing, so walking a choreography under it never
    touches a value.
    """

    def __init__(self, location):
        self.location = location

    def owns(self, owner):
        return self.location is not None and owner == self.location

    def __repr__(self):
        return f"Focus({self.location!r})"


class GlobalView(LocatedView):

    def owns(self, owner):
        return True

    def __repr__(self):
        return "GlobalView()"


def focus(location):
    return Focus(location)


def located_bind(lv, f):
    """Bind a located value

    Present values are passed to ``f``; absent ones are returned unchanged
    without calling it.
    """

    if isinstance(lv.content, Present):
        return f(lv.content.value)
    return lv


def located_map(lv, fn):
    if isinstance(lv.content, Present):
        return Located(lv.owner, Present(fn(lv.content.value)))
    return lv
