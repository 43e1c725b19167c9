""" Hand-written network files.

Networks that were not projected from a choreography, for exercising the
checker and the runtimes directly. After the same preamble as choreography
files, each location lists its actions::

    Alice:
      x <- recv Bob int
      send Bob (add x 1)
      locally (show x)

``send`` evaluates its expression with the variables bound so far, and
``locally`` closes its term over them. The arity after ``recv`` defaults to
``value``.
"""

import pathlib
import warnings
from dataclasses import dataclass

from arpeggio import EOF, Optional, ZeroOrMore
from arpeggio import RegExMatch as _

from choreopy.choreo.syntax import PreambleBuilder, binding, location, preamble
from choreopy.effects.arity import ANY, arity_named
from choreopy.effects.term import pure
from choreopy.exceptions import ChoreoError, LocalEvaluationError
from choreopy.local.lang import (PrimitiveRegistry, close_term,
                                 default_registry, eval_local)
from choreopy.local.syntax import expr, find, parse_tree
from choreopy.local.value import UNIT
from choreopy.process.process import locally, recv, send


def arity():
    return _(r'(?:unit|bool|int|str|value)\b')


def recv_action():
    return Optional(binding), _(r'recv\b'), location, Optional(arity)


def send_action():
    return _(r'send\b'), location, expr


def locally_action():
    return Optional(binding), _(r'locally\b'), expr


def action():
    return [recv_action, send_action, locally_action]


def block():
    return location, ":", ZeroOrMore(action)


def network_file():
    return preamble, ZeroOrMore(block), EOF


@dataclass(frozen=True)
class RawNetwork:
    processes: dict
    registry: PrimitiveRegistry


class NetworkBuilder(PreambleBuilder):

    def binder_of(self, node):
        bindings = find(node, "binding")
        if not bindings:
            return None
        b, = find(bindings[0], "binder")
        return b.value

    def build_action(self, node):
        inner, = find(node, "recv_action", "send_action", "locally_action")
        return self.build(inner)

    def build_recv_action(self, node):
        source, = find(node, "location")
        arities = find(node, "arity")
        expected = arity_named(arities[0].value) if arities else ANY
        return ("recv", self.binder_of(node), source.value, expected)

    def build_send_action(self, node):
        to, = find(node, "location")
        term, = self.terms(node)
        return ("send", None, to.value, term)

    def build_locally_action(self, node):
        term, = self.terms(node)
        return ("locally", self.binder_of(node), None, term)

    def build_block(self, node):
        loc, = find(node, "location")
        actions = [self.build(n) for n in find(node, "action")]
        for kind, _, peer, _ in actions:
            if kind == "send" and peer == loc.value:
                warnings.warn(f"{loc.value} sends to itself")
        return loc.value, actions

    def build_network_file(self, node):
        preambles = find(node, "preamble")
        reg = self.build(preambles[0]) if preambles else default_registry()
        processes = {}
        for block_node in find(node, "block"):
            loc, actions = self.build(block_node)
            if loc in processes:
                raise self.error(block_node, f"duplicate block for {loc}")
            processes[loc] = to_process(actions, reg.at(loc), loc)
        return RawNetwork(processes, reg)


def to_process(actions, reg, loc, env=None):
    """Process performing parsed network actions

    ``reg`` is the registry ``send`` expressions are evaluated in.
    """

    env = env or {}
    if not actions:
        return pure(UNIT)
    (kind, binder, peer, arg), rest = actions[0], actions[1:]

    def k(v):
        bound = env if binder is None else {**env, binder: v}
        return to_process(rest, reg, loc, bound)

    if kind == "recv":
        return recv(peer, arg).bind(k)
    if kind == "locally":
        return locally(close_term(arg, env)).bind(k)
    try:
        payload = eval_local(arg, env, reg)
    except ChoreoError as err:
        raise LocalEvaluationError(loc, err) from err
    return send(peer, payload).bind(k)


def parse_network(text):
    """Parse a network file

    Returns
    -------
    network : RawNetwork
        Process of every block, and the registry of the preamble.
    """

    parser, tree = parse_tree(network_file, text)
    return NetworkBuilder(parser).build(tree)


def load_network(path):
    return parse_network(pathlib.Path(path).read_text(encoding="utf-8"))
