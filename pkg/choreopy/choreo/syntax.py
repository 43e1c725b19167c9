""" Choreography files.

A file starts with an optional preamble of primitive definitions and
per-location inputs, followed by statements::

    let f(x) = (add x 1)
    input Alice = 42

    x <- Alice |> (input)
    y <- Alice => Bob <> (f x)

``|>`` may be written ``▷``, ``=>`` as ``⇒`` and ``<>`` as ``◇``. Binders
are optional, and ``#`` starts a comment.
"""

import pathlib

from arpeggio import EOF, Optional, ZeroOrMore
from arpeggio import RegExMatch as _

from choreopy.choreo.program import Program, Statement
from choreopy.exceptions import ChoreoError
from choreopy.local.lang import default_registry, define_primitive, eval_local
from choreopy.local.syntax import (IDENT, TreeBuilder, expr, find, name,
                                   parse_tree)


def location():
    return _(IDENT)


def binder():
    return _(IDENT)


def binding():
    return binder, "<-"


def triangle():
    return ["|>", "▷"]


def arrow():
    return ["=>", "⇒"]


def diamond():
    return ["<>", "◇"]


def comm_stmt():
    return Optional(binding), location, arrow, location, diamond, expr


def local_stmt():
    return Optional(binding), location, triangle, expr


def statement():
    return [comm_stmt, local_stmt]


def params():
    return "(", Optional(name, ZeroOrMore(",", name)), ")"


def definition():
    return _(r'let\b'), name, params, "=", expr


def input_decl():
    return _(r'input\b'), location, "=", expr


def preamble():
    return ZeroOrMore([definition, input_decl])


def choreo_file():
    return preamble, ZeroOrMore(statement), EOF


class PreambleBuilder(TreeBuilder):
    """Builds the primitive registry declared by a file preamble"""

    def build_preamble(self, node):
        reg = default_registry()
        for decl in find(node, "definition", "input_decl"):
            try:
                reg = self.build(decl)(reg)
            except ChoreoError as err:
                raise self.error(decl, str(err)) from err
        return reg

    def build_definition(self, node):
        fn, = find(node, "name")
        params, = find(node, "params")
        names = tuple(p.value for p in find(params, "name"))
        body, = self.terms(node)
        return lambda reg: define_primitive(reg, fn.value, names, body)

    def build_input_decl(self, node):
        loc, = find(node, "location")
        term, = self.terms(node)
        return lambda reg: reg.with_input(loc.value,
                                          eval_local(term, {}, reg))


class ChoreoBuilder(PreambleBuilder):

    def binder_of(self, node):
        bindings = find(node, "binding")
        if not bindings:
            return None
        b, = find(bindings[0], "binder")
        return b.value

    def build_statement(self, node):
        inner, = find(node, "comm_stmt", "local_stmt")
        return self.build(inner)

    def build_comm_stmt(self, node):
        sender, receiver = (n.value for n in find(node, "location"))
        term, = self.terms(node)
        return Statement(self.binder_of(node), sender, receiver, term,
                         position=self.linecol(node))

    def build_local_stmt(self, node):
        loc, = find(node, "location")
        term, = self.terms(node)
        return Statement(self.binder_of(node), loc.value, loc.value, term,
                         position=self.linecol(node))

    def build_choreo_file(self, node):
        # an empty preamble leaves no node in the tree
        preamble = find(node, "preamble")
        reg = self.build(preamble[0]) if preamble else default_registry()
        statements = [self.build(n) for n in find(node, "statement")]
        return Program(statements, reg)


def parse_choreography(text):
    """Parse a choreography file

    Parameters
    ----------
    text : str

    Returns
    -------
    program : Program

    Raises
    ------
    ParseError
        For malformed input, or a preamble entry that fails, with its line
        and column.
    """

    parser, tree = parse_tree(choreo_file, text)
    return ChoreoBuilder(parser).build(tree)


def load_choreography(path):
    """Read and parse a UTF-8 choreography file"""
    return parse_choreography(pathlib.Path(path).read_text(encoding="utf-8"))
