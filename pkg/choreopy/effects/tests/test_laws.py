from choreopy.effects.term import bind, interp, probe_equivalent, pure
from choreopy.effects.tests.signature import (default_rng, gen_kleisli,
                                              gen_term)
from choreopy.local.value import Int

NUM_TERMS = 500
MAX_DEPTH = 4


def test_monad_laws():

    rng = default_rng(20240)
    for _ in range(NUM_TERMS):
        t = gen_term(rng, MAX_DEPTH)
        f = gen_kleisli(rng)
        g = gen_kleisli(rng)
        a = Int(int(rng.integers(0, 4)))

        # Left identity
        assert probe_equivalent(bind(pure(a), f), f(a))

        # Right identity
        assert probe_equivalent(bind(t, pure), t)

        # Associativity
        assert probe_equivalent(bind(bind(t, f), g),
                                bind(t, lambda x: bind(f(x), g)))


def test_interp_is_a_homomorphism():

    # Handler answering each operation with the first value of its domain
    def first(op, k):
        return (op,) + k(op.arity.domain()[0])

    def leaf(a):
        return (a,)

    rng = default_rng(7)
    for _ in range(100):
        t = gen_term(rng, MAX_DEPTH)
        f = gen_kleisli(rng)

        lhs = interp(first, leaf, bind(t, f))
        rhs = interp(first, lambda x: interp(first, leaf, f(x)), t)
        assert lhs == rhs
