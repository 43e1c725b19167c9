""" Network semantics.

A network is one process per location plus an unbounded FIFO buffer per
ordered pair of locations. Sends never block; a receive is enabled when the
buffer from its source is nonempty and its head conforms to the expected
arity. Every step runs one operation of one process, and a ``locally`` is
evaluated in a single step.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any

from choreopy.effects.term import Node
from choreopy.exceptions import ChoreoError, LocalEvaluationError
from choreopy.local.lang import eval_traced
from choreopy.local.value import UNIT
from choreopy.process.process import Locally, Recv, Send

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalStep:
    location: str
    value: Any

    def __str__(self):
        return f"{self.location}: locally -> {self.value}"


@dataclass(frozen=True)
class SendStep:
    location: str
    to: str
    value: Any

    def __str__(self):
        return f"{self.location}: send {self.to} {self.value}"


@dataclass(frozen=True)
class RecvStep:
    location: str
    source: str
    value: Any

    def __str__(self):
        return f"{self.location}: recv {self.source} -> {self.value}"


@dataclass(frozen=True)
class WaitingOn:
    """A process blocked on an empty buffer"""
    location: str
    source: str

    def __str__(self):
        return f"{self.location} waits on {self.source}"


@dataclass(frozen=True)
class TypeMismatchAtRecv:
    location: str
    source: str
    expected: Any
    got: Any

    def __str__(self):
        return (f"{self.location} expected {self.expected} from "
                f"{self.source}, got {self.got}")


@dataclass(frozen=True)
class Undelivered:
    """Messages left in a buffer after every process finished"""
    sender: str
    receiver: str
    values: tuple

    def __str__(self):
        return (f"{len(self.values)} message(s) from {self.sender} to "
                f"{self.receiver} never received")


@dataclass(frozen=True, eq=False)
class NetworkState:
    """A configuration of the network

    Parameters
    ----------
    procs : dict
        Residual process of each location.
    histories : dict
        Responses each location's process has consumed so far. Processes are
        deterministic, so together with the initial network the histories
        identify the residual processes.
    buffers : dict
        Map from (sender, receiver) to the tuple of values in flight.
    observations : dict
        Values each location's computations showed, in order.
    sent, received : int
        Total enqueues and dequeues so far.
    """
    procs: dict
    histories: dict
    buffers: dict = field(default_factory=dict)
    observations: dict = field(default_factory=dict)
    sent: int = 0
    received: int = 0

    @classmethod
    def initial(cls, procs):
        procs = dict(procs)
        return cls(procs, {loc: () for loc in procs}, {},
                   {loc: () for loc in procs})

    def key(self):
        """Hashable canonical form, used to memoize exploration"""
        return (tuple(sorted(self.histories.items())),
                tuple(sorted((pair, q) for pair, q in self.buffers.items()
                             if q)),
                tuple(sorted(self.observations.items())))

    @property
    def finished(self):
        return not any(isinstance(p, Node) for p in self.procs.values())

    @property
    def terminal(self):
        """Every process finished and every buffer is empty"""
        return self.finished and not any(self.buffers.values())

    def _advance(self, loc, response, **changes):
        procs = dict(self.procs)
        procs[loc] = self.procs[loc].cont(response)
        histories = dict(self.histories)
        histories[loc] = self.histories[loc] + (response,)
        return replace(self, procs=procs, histories=histories, **changes)


def _local_step(st, loc, op, reg):
    try:
        evaluation = eval_traced(op.term, {}, reg.at(loc))
    except ChoreoError as err:
        raise LocalEvaluationError(loc, err) from err
    observations = dict(st.observations)
    observations[loc] = st.observations.get(loc, ()) + evaluation.shown
    return (LocalStep(loc, evaluation.value),
            st._advance(loc, evaluation.value, observations=observations))


def _send_step(st, loc, op):
    pair = (loc, op.to)
    buffers = dict(st.buffers)
    buffers[pair] = st.buffers.get(pair, ()) + (op.payload,)
    return (SendStep(loc, op.to, op.payload),
            st._advance(loc, UNIT, buffers=buffers, sent=st.sent + 1))


def _recv_step(st, loc, op):
    pair = (op.source, loc)
    queue = st.buffers.get(pair, ())
    if not queue or not op.expected.conforms(queue[0]):
        return None
    buffers = dict(st.buffers)
    buffers[pair] = queue[1:]
    return (RecvStep(loc, op.source, queue[0]),
            st._advance(loc, queue[0], buffers=buffers,
                        received=st.received + 1))


def step_network(st, reg):
    """Every step enabled in a network state

    Parameters
    ----------
    st : NetworkState
    reg : PrimitiveRegistry
        Registry ``locally`` terms are evaluated in, seen from the
        evaluating location.

    Returns
    -------
    steps : list
        (step, successor) pairs, ordered by location.

    Raises
    ------
    LocalEvaluationError
        If a ``locally`` term fails to evaluate.
    """

    steps = []
    for loc in sorted(st.procs):
        p = st.procs[loc]
        if not isinstance(p, Node):
            continue
        op = p.op
        if isinstance(op, Locally):
            steps.append(_local_step(st, loc, op, reg))
        elif isinstance(op, Send):
            steps.append(_send_step(st, loc, op))
        elif isinstance(op, Recv):
            step = _recv_step(st, loc, op)
            if step is not None:
                steps.append(step)
        else:
            raise TypeError(f"{loc} performs {op!r}, not a process operation")

    return steps


def stuck_causes(st):
    """Why the processes of a state cannot move

    Returns
    -------
    causes : list
        WaitingOn and TypeMismatchAtRecv for blocked receives, and
        Undelivered for buffers left over once every process finished.
    """

    causes = []
    for loc in sorted(st.procs):
        p = st.procs[loc]
        if not isinstance(p, Node) or not isinstance(p.op, Recv):
            continue
        queue = st.buffers.get((p.op.source, loc), ())
        if not queue:
            causes.append(WaitingOn(loc, p.op.source))
        elif not p.op.expected.conforms(queue[0]):
            causes.append(TypeMismatchAtRecv(loc, p.op.source,
                                             p.op.expected, queue[0]))

    if st.finished:
        for (s, r), queue in sorted(st.buffers.items()):
            if queue:
                causes.append(Undelivered(s, r, queue))

    return causes
