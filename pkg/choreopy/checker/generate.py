""" Random choreographies.

Programs are straight-line sequences of local steps and communications
between up to four locations. Terms are small integer expressions over the
variables the computing location owns, so every generated program is well
formed and evaluates without error.
"""

import numpy as np

from choreopy.choreo.program import Program, Statement
from choreopy.effects.arity import INT
from choreopy.local.lang import Lit, PrimApp, Var, default_registry
from choreopy.local.value import Int

LOCATIONS = ("A", "B", "C", "D")
MAX_LOCATIONS = len(LOCATIONS)
MAX_DEPTH = 6

LOCAL_SHARE = 0.35
SHOW_SHARE = 0.3
OPERATORS = ("add", "sub", "mul")


def _int_term(rng, names, depth):
    if depth == 0 or rng.random() < 0.4:
        if names and rng.random() < 0.6:
            return Var(str(rng.choice(names)))
        return Lit(Int(int(rng.integers(0, 4))))
    op = str(rng.choice(OPERATORS))
    return PrimApp(op, (_int_term(rng, names, depth - 1),
                        _int_term(rng, names, depth - 1)))


def gen_program(seed, num_locs=3, depth=4, term_depth=2):
    """Generate a random program

    Parameters
    ----------
    seed : int
        Seed of the numpy random generator; equal seeds give equal programs.
    num_locs : int, optional
        Number of locations to draw from, 1 to 4.
    depth : int, optional
        Number of statements, 1 to 6.
    term_depth : int, optional
        Maximum nesting of primitive applications in a term.

    Returns
    -------
    program : Program
    """

    if not 1 <= num_locs <= MAX_LOCATIONS:
        raise ValueError(f"num_locs must be between 1 and {MAX_LOCATIONS}")
    if not 1 <= depth <= MAX_DEPTH:
        raise ValueError(f"depth must be between 1 and {MAX_DEPTH}")

    rng = np.random.default_rng(seed)
    locs = LOCATIONS[:num_locs]
    owned = {loc: [] for loc in locs}
    statements = []

    for i in range(depth):
        sender = str(rng.choice(locs))
        others = [loc for loc in locs if loc != sender]
        if not others or rng.random() < LOCAL_SHARE:
            receiver = sender
        else:
            receiver = str(rng.choice(others))

        term = _int_term(rng, owned[sender], term_depth)
        if rng.random() < SHOW_SHARE:
            term = PrimApp("show", (term,))

        binder = f"x{i}"
        statements.append(Statement(binder, sender, receiver, term, INT))
        owned[receiver].append(binder)

    return Program(statements, default_registry())


def gen_choreo(seed, num_locs=3, depth=4):
    """Generate a random choreography, see `gen_program`"""
    return gen_program(seed, num_locs, depth).to_choreo()
