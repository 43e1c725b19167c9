""" Free-monad terms over effect signatures.

A Term is either a Leaf carrying a result or a Node carrying an operation
payload together with a continuation from the operation's response to the
rest of the program. Terms are inert data: nothing happens until a handler
interprets them with `interp`, or a test walks them with `probe`.

Operation payloads expose an ``arity`` attribute, the descriptor of the
responses a handler may answer them with.
"""

from dataclasses import dataclass
from typing import Any, Callable

from choreopy.exceptions import ScriptTypeMismatch, SignatureError


class Term:
    """Base class of free-monad terms"""

    __slots__ = ()

    def bind(self, f):
        return bind(self, f)

    def then(self, other):
        """Sequence ``other`` after this term, discarding the result"""
        return bind(self, lambda _: other)

    def map(self, f):
        return bind(self, lambda x: Leaf(f(x)))


@dataclass(frozen=True)
class Leaf(Term):
    result: Any


@dataclass(frozen=True, eq=False)
class Node(Term):
    op: Any
    cont: Callable[[Any], Term]


class _Starved:

    def __repr__(self):
        return "Starved"


STARVED = _Starved()


@dataclass(frozen=True)
class Probe:
    """Operations emitted by a probe and how the walk ended"""
    trace: tuple
    outcome: Any

    @property
    def starved(self):
        return self.outcome is STARVED


class Signature:
    """A family of operation payload classes

    Parameters
    ----------
    name : str
        Name used in error messages.
    ops : tuple of type
        Payload classes belonging to the signature. Each must expose an
        ``arity`` attribute.
    """

    def __init__(self, name, ops):
        self.name = name
        self.ops = tuple(ops)

    def __contains__(self, op):
        return isinstance(op, self.ops)

    def arity(self, op):
        if op not in self:
            raise SignatureError(f"{op!r} is not an operation of {self.name}")
        return op.arity

    def perform(self, op):
        """Perform an operation of this signature"""
        if op not in self:
            raise SignatureError(f"{op!r} is not an operation of {self.name}")
        return perform(op)

    def __repr__(self):
        return f"Signature({self.name!r})"


def pure(a):
    return Leaf(a)


def bind(t, f):
    """Sequence a term with a continuation producing the next term"""

    if isinstance(t, Leaf):
        return f(t.result)

    return Node(t.op, lambda r, k=t.cont: bind(k(r), f))


def perform(op):
    """Term that performs ``op`` and returns its response"""
    return Node(op, pure)


def interp(algebra, var_map, t):
    """Fold a term through a handler

    Parameters
    ----------
    algebra : callable
        ``algebra(op, k)`` gives meaning to one operation, where ``k`` maps a
        response to the interpretation of the rest of the term.
    var_map : callable
        Interpretation of leaf results.
    t : Term
        Term to interpret.

    Returns
    -------
    out : object
        Element of the algebra's carrier.
    """

    if isinstance(t, Leaf):
        return var_map(t.result)

    return algebra(t.op, lambda r, k=t.cont: interp(algebra, var_map, k(r)))


def probe(t, script):
    """Walk a term, answering its operations from a response script

    Parameters
    ----------
    t : Term
    script : sequence
        Responses fed to successive operations.

    Returns
    -------
    probe : Probe
        Emitted payloads, and the result or STARVED if the script ran out
        before a leaf.
    """

    trace = []
    responses = iter(script)
    while isinstance(t, Node):
        trace.append(t.op)
        try:
            response = next(responses)
        except StopIteration:
            return Probe(tuple(trace), STARVED)
        if not t.op.arity.conforms(response):
            raise ScriptTypeMismatch(t.op, response)
        t = t.cont(response)

    return Probe(tuple(trace), t.result)


def observe(t, max_ops=None):
    """Probe a term with every script drawn from its arity domains

    Parameters
    ----------
    t : Term
    max_ops : int, optional
        Stop a branch after this many operations; the branch then ends
        STARVED. Unbounded if not given.

    Returns
    -------
    observations : dict
        Map from each maximal response script to its (trace, outcome).
    """

    observations = {}
    stack = [(t, (), ())]
    while stack:
        term, script, trace = stack.pop()
        if isinstance(term, Leaf):
            observations[script] = (trace, term.result)
            continue
        if max_ops is not None and len(script) >= max_ops:
            observations[script] = (trace + (term.op,), STARVED)
            continue
        for response in term.op.arity.domain():
            stack.append((term.cont(response), script + (response,),
                          trace + (term.op,)))

    return observations


def probe_equivalent(t1, t2, max_ops=None):
    """Observational equality of two terms over their arity domains"""
    return observe(t1, max_ops) == observe(t2, max_ops)


def depth(t, max_ops=None):
    """Longest operation chain over the arity domains"""
    return max((len(trace) for trace, _ in observe(t, max_ops).values()),
               default=0)
