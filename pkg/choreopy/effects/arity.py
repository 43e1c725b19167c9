""" Arity descriptors.

An arity descriptor is the set of responses a handler may answer an
operation with. Descriptors check conformance of dynamic values and expose a
small finite domain used when probing terms exhaustively.
"""

from dataclasses import dataclass

from choreopy.local.value import (UNIT, Bool, Int, Str, Unit, Value)


class Arity:
    """Base class of arity descriptors"""

    name = "arity"

    def conforms(self, value):
        raise NotImplementedError()

    def domain(self):
        """Finite sample of conforming responses, in a fixed order"""
        raise NotImplementedError()

    def __str__(self):
        return self.name

    __repr__ = __str__


@dataclass(frozen=True, repr=False)
class UnitArity(Arity):
    name = "unit"

    def conforms(self, value):
        return isinstance(value, Unit)

    def domain(self):
        return (UNIT,)


@dataclass(frozen=True, repr=False)
class BoolArity(Arity):
    name = "bool"

    def conforms(self, value):
        return isinstance(value, Bool)

    def domain(self):
        return (Bool(False), Bool(True))


@dataclass(frozen=True, repr=False)
class IntArity(Arity):
    """Any Int conforms; ``lo`` and ``hi`` bound the probing domain"""
    lo: int = 0
    hi: int = 3
    name = "int"

    def conforms(self, value):
        return isinstance(value, Int)

    def domain(self):
        return tuple(Int(i) for i in range(self.lo, self.hi + 1))


@dataclass(frozen=True, repr=False)
class StrArity(Arity):
    name = "str"

    def conforms(self, value):
        return isinstance(value, Str)

    def domain(self):
        return (Str("a"), Str("b"))


@dataclass(frozen=True, repr=False)
class AnyArity(Arity):
    name = "value"

    def conforms(self, value):
        return isinstance(value, Value)

    def domain(self):
        return (UNIT, Bool(True), Int(0), Int(1), Str("a"))


UNIT_ARITY = UnitArity()
BOOL = BoolArity()
INT = IntArity()
STR = StrArity()
ANY = AnyArity()

ARITIES = {a.name: a for a in (UNIT_ARITY, BOOL, INT, STR, ANY)}


def arity_of(value):
    """Most specific arity descriptor a value conforms to"""
    for arity in (UNIT_ARITY, BOOL, INT, STR):
        if arity.conforms(value):
            return arity
    return ANY


def arity_named(name):
    """Look up a descriptor by its surface name (unit, bool, int, str,
    value)"""
    try:
        return ARITIES[name]
    except KeyError:
        raise ValueError(f"unknown arity '{name}', expected one of "
                         + ", ".join(ARITIES)) from None
