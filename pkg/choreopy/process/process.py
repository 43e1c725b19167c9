""" Process signature.

Processes are the programs a single location runs: terms over the three
operations locally, send and recv. They are the output of endpoint
projection and the input of the network checker and the runtimes.
"""

from dataclasses import dataclass

from choreopy.effects.arity import ANY, UNIT_ARITY, Arity
from choreopy.effects.term import Node, Signature
from choreopy.local.lang import LocalTerm
from choreopy.local.value import UNIT


@dataclass(frozen=True)
class Locally:
    """Evaluate a local term, answering with its result"""
    term: LocalTerm
    arity = ANY

    def __str__(self):
        return f"locally {self.term}"


@dataclass(frozen=True)
class Send:
    """Enqueue an evaluated value for another location, answering unit"""
    to: str
    payload: object
    arity = UNIT_ARITY

    def __str__(self):
        return f"send {self.to} {self.payload}"


@dataclass(frozen=True)
class Recv:
    """Dequeue the next value sent by ``source``

    The response must conform to ``expected``.
    """
    source: str
    expected: Arity = ANY

    @property
    def arity(self):
        return self.expected

    def __str__(self):
        return f"recv {self.source}"


PROCESS = Signature("process", (Locally, Send, Recv))


def locally(t):
    return PROCESS.perform(Locally(t))


def send(to, v):
    return PROCESS.perform(Send(to, v))


def recv(source, expected=ANY):
    return PROCESS.perform(Recv(source, expected))


@dataclass(frozen=True)
class Hole:
    """Placeholder for the response to the ``n``-th operation of a trace"""
    n: int

    def __str__(self):
        return f"${self.n}"


def operations(p):
    """Operations of a process without running it

    Every Locally and Recv is answered with a Hole numbering the operation
    (from 1), and every Send with unit. Continuations only move values
    around, so the trace is the same for every real response.

    Parameters
    ----------
    p : Term
        Process over the PROCESS signature.

    Returns
    -------
    ops : tuple
        Operation payloads, in order.
    """

    ops = []
    while isinstance(p, Node):
        ops.append(p.op)
        response = UNIT if isinstance(p.op, Send) else Hole(len(ops))
        p = p.cont(response)

    return tuple(ops)


def render(p):
    """Process trace, one operation per line"""
    return "\n".join(str(op) for op in operations(p))
