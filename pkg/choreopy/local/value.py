""" Value universe of the local language.

Everything that is computed locally, stored in a located value or sent over
a channel is one of the six Value kinds below. Values are immutable and
hashable, and structural equality is plain dataclass equality.
"""

from dataclasses import dataclass, field

import numpy as np


def wrap_int64(i):
    """Wrap an integer to signed 64-bit two's complement"""
    return (int(i) + 2**63) % 2**64 - 2**63


class Value:
    """Base class of local-language values"""

    __slots__ = ()


@dataclass(frozen=True)
class Unit(Value):

    def __str__(self):
        return "()"


@dataclass(frozen=True)
class Bool(Value):
    b: bool

    def __post_init__(self):
        object.__setattr__(self, "b", bool(self.b))

    def __str__(self):
        return "true" if self.b else "false"


@dataclass(frozen=True)
class Int(Value):
    i: int

    def __post_init__(self):
        object.__setattr__(self, "i", wrap_int64(self.i))

    def __str__(self):
        return str(self.i)


@dataclass(frozen=True)
class Str(Value):
    s: str

    def __str__(self):
        # quoted as in the surface syntax
        escaped = self.s.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'


@dataclass(frozen=True)
class Pair(Value):
    fst: Value
    snd: Value

    def __str__(self):
        return f"({self.fst}, {self.snd})"


@dataclass(frozen=True)
class List(Value):
    items: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.items) + "]"


UNIT = Unit()


def from_python(obj):
    """Convert a plain Python object into a Value

    Parameters
    ----------
    obj : None, bool, int, str, tuple, list or Value
        None maps to Unit, a 2-tuple to Pair and a list to List. Values are
        returned unchanged.

    Returns
    -------
    value : Value
    """

    if isinstance(obj, Value):
        return obj
    if obj is None:
        return UNIT
    # bool before int, bool is a subclass of int
    if isinstance(obj, (bool, np.bool_)):
        return Bool(bool(obj))
    if isinstance(obj, (int, np.integer)):
        return Int(int(obj))
    if isinstance(obj, str):
        return Str(obj)
    if isinstance(obj, tuple) and len(obj) == 2:
        return Pair(from_python(obj[0]), from_python(obj[1]))
    if isinstance(obj, list):
        return List(tuple(from_python(o) for o in obj))

    raise TypeError(f"cannot convert {obj!r} to a Value")


def show_values(values):
    """Render a sequence of values as a bracketed list, e.g. ``[83]``"""
    return "[" + ", ".join(str(v) for v in values) + "]"
