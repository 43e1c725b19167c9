""" Process driver.

`drive` runs one process to completion: ``locally`` terms are evaluated on
the spot, and ``send``/``recv`` are delegated to a channel. The in-memory
and TCP runtimes differ only in the channel they pass.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

from choreopy.effects.term import Node
from choreopy.exceptions import (ChoreoError, LocalEvaluationError,
                                 RecvTypeMismatch)
from choreopy.local.lang import eval_traced
from choreopy.local.value import UNIT
from choreopy.process.process import Locally, Recv, Send

logger = logging.getLogger(__name__)


@dataclass
class Execution:
    """Values a process showed, and its result"""
    observations: list = field(default_factory=list)
    result: Any = None


class Channel:
    """Message transport seen from one location"""

    def send(self, to, value):
        raise NotImplementedError()

    def recv(self, source):
        raise NotImplementedError()


class NoChannel(Channel):
    """Channel of a process that must not communicate"""

    def send(self, to, value):
        raise ChoreoError(f"process sends to {to} but has no channel")

    def recv(self, source):
        raise ChoreoError(f"process receives from {source} but has no "
                          "channel")


def drive(proc, loc, reg, channel):
    """Run a process at one location

    Parameters
    ----------
    proc : Term
        Process over the PROCESS signature.
    loc : str
        Location running the process.
    reg : PrimitiveRegistry
    channel : Channel

    Returns
    -------
    execution : Execution

    Raises
    ------
    LocalEvaluationError
        If a ``locally`` term fails.
    RecvTypeMismatch
        If a received value does not conform to the expected arity.
    """

    logger.info("%s started", loc)
    execution = Execution()
    reg = reg.at(loc)
    p = proc
    while isinstance(p, Node):
        op = p.op
        if isinstance(op, Locally):
            try:
                evaluation = eval_traced(op.term, {}, reg)
            except ChoreoError as err:
                raise LocalEvaluationError(loc, err) from err
            execution.observations.extend(evaluation.shown)
            response = evaluation.value
        elif isinstance(op, Send):
            logger.debug("%s -> %s: %s", loc, op.to, op.payload)
            channel.send(op.to, op.payload)
            response = UNIT
        elif isinstance(op, Recv):
            response = channel.recv(op.source)
            logger.debug("%s <- %s: %s", loc, op.source, response)
            if not op.expected.conforms(response):
                raise RecvTypeMismatch(loc, op.source, op.expected, response)
        else:
            raise TypeError(f"{loc} performs {op!r}, not a process operation")
        p = p.cont(response)

    execution.result = p.result
    logger.info("%s finished", loc)
    return execution


def run_local(proc, reg, loc=None):
    """Run a process that does not communicate"""
    return drive(proc, loc, reg, NoChannel())
