""" Small signature shared by the effects tests """

from dataclasses import dataclass

import numpy as np

from choreopy.effects.arity import BOOL, INT, UNIT_ARITY
from choreopy.effects.term import Signature, pure
from choreopy.local.value import Int


@dataclass(frozen=True)
class Ask:
    arity = INT


@dataclass(frozen=True)
class Flip:
    arity = BOOL


@dataclass(frozen=True)
class Tell:
    value: int
    arity = UNIT_ARITY


TEST = Signature("test", (Ask, Flip, Tell))


def gen_term(rng, depth):
    """Random term of at most ``depth`` operations with Int leaves in 0..3"""

    if depth == 0 or rng.random() < 0.3:
        return pure(Int(int(rng.integers(0, 4))))

    kind = rng.integers(0, 3)
    if kind == 0:
        children = [gen_term(rng, depth - 1) for _ in range(4)]
        return TEST.perform(Ask()).bind(lambda r: children[r.i])
    if kind == 1:
        children = [gen_term(rng, depth - 1) for _ in range(2)]
        return TEST.perform(Flip()).bind(lambda r: children[int(r.b)])
    child = gen_term(rng, depth - 1)
    return TEST.perform(Tell(int(rng.integers(0, 4)))).bind(lambda r: child)


def gen_kleisli(rng):
    """Random continuation from Int 0..3 to terms of depth at most 1"""
    table = [gen_term(rng, 1) for _ in range(4)]
    return lambda x: table[x.i]


def default_rng(seed=0):
    return np.random.default_rng(seed)
