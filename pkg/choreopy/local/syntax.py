""" Surface syntax of local terms.

S-expressions such as ``(add 2 3)`` or ``(let x 2 (mul x x))``. Literals are
integers, double-quoted strings, ``true``/``false`` and ``()`` for unit. The
grammar rules and the tree builder are shared with the choreography and
network file grammars.
"""

import json

from arpeggio import EOF, NoMatch, NonTerminal, ParserPython, ZeroOrMore
from arpeggio import RegExMatch as _

from choreopy.exceptions import ParseError
from choreopy.local.lang import Let, Lit, PrimApp, Var
from choreopy.local.value import UNIT, Bool, Int, Str

IDENT = r'[A-Za-z_][A-Za-z0-9_]*'


def comment():
    return _(r'#[^\n]*')


def integer():
    return _(r'-?\d+\b')


def string():
    return _(r'"(?:[^"\\\n]|\\.)*"')


def boolean():
    return _(r'(?:true|false)\b')


def unit():
    return _(r'\(\s*\)')


def variable():
    return _(IDENT)


def name():
    return _(IDENT)


def let_expr():
    return "(", _(r'let\b'), name, expr, expr, ")"


def application():
    return "(", name, ZeroOrMore(expr), ")"


def expr():
    return [integer, string, boolean, unit, let_expr, application, variable]


def local_term():
    return expr, EOF


EXPR_RULES = ("expr", "integer", "string", "boolean", "unit", "variable",
              "let_expr", "application")


def find(node, *rules):
    """Named descendants of a parse tree node, looking through anonymous
    grouping nodes only"""

    found = []
    if not isinstance(node, NonTerminal):
        return found
    for child in node:
        if child.rule_name in rules:
            found.append(child)
        elif not child.rule_name and isinstance(child, NonTerminal):
            found.extend(find(child, *rules))
    return found


class TreeBuilder:
    """Builds values from an arpeggio parse tree

    ``build(node)`` dispatches on the node's rule name to a
    ``build_<rule>`` method.
    """

    def __init__(self, parser):
        self.parser = parser

    def build(self, node):
        method = getattr(self, f"build_{node.rule_name}", None)
        if method is None:
            raise TypeError(f"no builder for rule '{node.rule_name}'")
        return method(node)

    def linecol(self, node):
        return self.parser.pos_to_linecol(node.position)

    def error(self, node, message):
        line, col = self.linecol(node)
        return ParseError(message, line, col)

    def terms(self, node):
        return [self.build(n) for n in find(node, *EXPR_RULES)]

    def build_expr(self, node):
        inner, = find(node, *EXPR_RULES)
        return self.build(inner)

    def build_integer(self, node):
        return Lit(Int(int(node.value)))

    def build_string(self, node):
        return Lit(Str(json.loads(node.value)))

    def build_boolean(self, node):
        return Lit(Bool(node.value == "true"))

    def build_unit(self, node):
        return Lit(UNIT)

    def build_variable(self, node):
        return Var(node.value)

    def build_name(self, node):
        return node.value

    def build_let_expr(self, node):
        bound, body = self.terms(node)
        binder, = find(node, "name")
        return Let(binder.value, bound, body)

    def build_application(self, node):
        fn, = find(node, "name")
        return PrimApp(fn.value, tuple(self.terms(node)))

    def build_local_term(self, node):
        term, = self.terms(node)
        return term


def parse_tree(grammar, text):
    """Parse ``text``, returning the parser and the tree

    Raises
    ------
    ParseError
        With the line and column of the first unexpected input.
    """

    parser = ParserPython(grammar, comment_def=comment)
    try:
        tree = parser.parse(text)
    except NoMatch as err:
        line, col = parser.pos_to_linecol(err.position)
        expected = ", ".join(sorted({r.rule_name or r.name
                                     for r in err.rules}))
        raise ParseError(f"expected {expected}", line, col) from None
    return parser, tree


def parse_local(text):
    """Parse a local term from its s-expression surface syntax

    Parameters
    ----------
    text : str

    Returns
    -------
    term : LocalTerm
    """

    parser, tree = parse_tree(local_term, text)
    return TreeBuilder(parser).build(tree)
