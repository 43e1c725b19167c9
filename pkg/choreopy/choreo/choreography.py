""" Choreographies.

A choreography is a single program for every location. Its only operation
is ``Comm(s, r, computation)``: ``s`` evaluates a local term it owns and the
result becomes a located value owned by ``r``. A local step at ``s`` is the
special case ``Comm(s, s, ...)``.

Choreographies are parametric in the located-value interpretation: a
``Choreo`` wraps a function from a LocatedView to a Term over CHOREO, and
each consumer picks the view it needs.
"""

import logging
from dataclasses import dataclass
from typing import Any

from choreopy.effects.arity import ANY, Arity
from choreopy.effects.term import Node, Signature, bind, pure
from choreopy.exceptions import ChoreoError, LocalEvaluationError
from choreopy.choreo.located import (ABSENT, Focus, GlobalView, Located,
                                     Present)
from choreopy.local.lang import eval_traced
from choreopy.local.value import UNIT

logger = logging.getLogger(__name__)


@dataclass(frozen=True, repr=False)
class LocatedArity(Arity):
    """Responses are located values owned by ``owner``"""
    owner: str
    inner: Arity = ANY
    name = "located"

    def conforms(self, value):
        if not isinstance(value, Located) or value.owner != self.owner:
            return False
        return not value.present or self.inner.conforms(value.content.value)

    def domain(self):
        return tuple(Located(self.owner, Present(v))
                     for v in self.inner.domain()) + (
            Located(self.owner, ABSENT),)

    def __str__(self):
        return f"{self.inner}@{self.owner}"


@dataclass(frozen=True)
class Comm:
    """Evaluate ``computation`` at ``sender`` and deliver it to ``receiver``

    ``computation`` is a LocalTerm located at the sender; ``expected`` is
    the arity of its result.
    """
    sender: str
    receiver: str
    computation: Located
    expected: Arity = ANY

    @property
    def arity(self):
        return LocatedArity(self.receiver, self.expected)

    @property
    def local(self):
        return self.sender == self.receiver


CHOREO = Signature("choreography", (Comm,))


def comm(s, r, t, expected=ANY):
    """``s`` computes the located term ``t`` and sends the result to ``r``

    The response is the result, located at ``r``.
    """
    return CHOREO.perform(Comm(s, r, t, expected))


def local_at(s, t, expected=ANY):
    """``s`` computes the located term ``t``; the result stays at ``s``"""
    return comm(s, s, t, expected)


class Choreo:
    """A choreography, parametric in the located-value interpretation

    Parameters
    ----------
    body : callable
        ``body(at)`` returns a Term over CHOREO, where ``at`` is a
        LocatedView used to build every located value.
    """

    def __init__(self, body):
        self.body = body

    def __call__(self, at):
        return self.body(at)

    def bind(self, k):
        """Sequence a choreography after this one

        ``k`` maps the located result of this choreography to the next
        Choreo.
        """
        return Choreo(lambda at: bind(self.body(at), lambda lv: k(lv)(at)))

    @classmethod
    def unit(cls, result=UNIT):
        return cls(lambda at: pure(result))


@dataclass(frozen=True)
class ChoreoOutcome:
    """Values each location observed, and the choreography's result"""
    observations: dict
    result: Any


def comm_pairs(c):
    """(sender, receiver) of every Comm, in order

    The walk runs under ``Focus(None)``, where every located value is
    absent.
    """

    pairs = []
    t = c(Focus(None))
    while isinstance(t, Node):
        op = t.op
        pairs.append((op.sender, op.receiver))
        t = t.cont(Located(op.receiver, ABSENT))

    return tuple(pairs)


def locations(c):
    """Locations a choreography mentions, in order of first mention"""
    return tuple(dict.fromkeys(loc for pair in comm_pairs(c) for loc in pair))


def cross_comms(c):
    """Number of Comms between two distinct locations"""
    return sum(1 for s, r in comm_pairs(c) if s != r)


def choreo_eval(c, reg):
    """Run a choreography by head reduction

    Each Comm is evaluated at its sender and the result handed to the
    continuation, located at the receiver.

    Parameters
    ----------
    c : Choreo
    reg : PrimitiveRegistry

    Returns
    -------
    outcome : ChoreoOutcome
        Map from every mentioned location to the tuple of values its
        computations showed, and the final result.

    Raises
    ------
    LocalEvaluationError
        If a local computation fails; the error carries the location.
    """

    observations = {loc: () for loc in locations(c)}
    t = c(GlobalView())
    while isinstance(t, Node):
        op = t.op
        term = op.computation.content.value
        try:
            evaluation = eval_traced(term, {}, reg.at(op.sender))
        except ChoreoError as err:
            raise LocalEvaluationError(op.sender, err) from err
        logger.debug("%s => %s: %s", op.sender, op.receiver, evaluation.value)
        observations[op.sender] += evaluation.shown
        t = t.cont(Located(op.receiver, Present(evaluation.value)))

    result = t.result
    if isinstance(result, Located):
        result = result.content.value

    return ChoreoOutcome(observations, result)
