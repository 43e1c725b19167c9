""" Straight-line choreographic programs.

A Program is a list of statements ``x <- s => r <> term`` together with the
registry their terms are evaluated in. It is what the choreography file
parser and the random generator produce; ``to_choreo`` turns it into a
Choreo.
"""

from dataclasses import dataclass, field
from typing import Optional

from choreopy.choreo.choreography import Choreo, comm
from choreopy.choreo.located import located_bind
from choreopy.effects.arity import Arity
from choreopy.effects.term import pure
from choreopy.exceptions import OwnershipError, UnboundVariable
from choreopy.local.lang import (LocalTerm, PrimitiveRegistry, close_term,
                                 default_registry, free_variables,
                                 infer_arity)
from choreopy.local.value import UNIT


@dataclass(frozen=True)
class Statement:
    """One communication, or a local step when sender == receiver

    Parameters
    ----------
    binder : str or None
        Variable bound to the result, owned by the receiver.
    sender, receiver : str
    term : LocalTerm
        Computation at the sender; its free variables must be owned by the
        sender.
    expected : Arity, optional
        Arity of the result. Inferred from ``term`` when not given.
    position : tuple, optional
        (line, column) in the source file.
    """
    binder: Optional[str]
    sender: str
    receiver: str
    term: LocalTerm
    expected: Optional[Arity] = None
    position: Optional[tuple] = field(default=None, compare=False)

    @property
    def local(self):
        return self.sender == self.receiver

    def __str__(self):
        lhs = f"{self.binder} <- " if self.binder else ""
        if self.local:
            return f"{lhs}{self.sender} |> {self.term}"
        return f"{lhs}{self.sender} => {self.receiver} <> {self.term}"


@dataclass(frozen=True)
class Program:
    statements: tuple = ()
    registry: PrimitiveRegistry = field(default_factory=default_registry)

    def __post_init__(self):
        object.__setattr__(self, "statements", tuple(self.statements))

    def __str__(self):
        return "\n".join(str(st) for st in self.statements)

    def _where(self, st):
        if st.position is None:
            return f"in '{st}'"
        return "at {}:{}".format(*st.position)

    def arities(self):
        """Result arity of every statement, inferred where not given

        Raises
        ------
        OwnershipError
            If a statement uses a variable owned by another location.
        UnboundVariable
            If a statement uses a variable no earlier statement binds.
        """

        owners = {}
        env = {}
        arities = []
        for st in self.statements:
            for name in free_variables(st.term):
                if name not in owners:
                    raise UnboundVariable(name)
                if owners[name] != st.sender:
                    raise OwnershipError(
                        f"{self._where(st)}: '{name}' is owned by "
                        f"{owners[name]}, not {st.sender}")
            expected = st.expected
            if expected is None:
                expected = infer_arity(st.term, self.registry.at(st.sender),
                                       env)
            arities.append(expected)
            if st.binder is not None:
                owners[st.binder] = st.receiver
                env[st.binder] = expected

        return tuple(arities)

    def to_choreo(self):
        """Build the choreography the statements describe

        Variables are looked up as located values; the computation of each
        statement is its term with the sender's variables let-bound, located
        at the sender. The result is the last statement's located value, or
        unit for an empty program.
        """

        arities = self.arities()
        stop = len(self.statements)
        return Choreo(lambda at: self._steps(at, arities, 0, stop, {}, UNIT,
                                             lambda env, last: pure(last)))

    def split(self, i):
        """Split the choreography after the first ``i`` statements

        Returns
        -------
        prefix : Choreo
            The first ``i`` statements. Its result is the pair of the
            binders mapped to their located values and the last located
            value.
        rest : callable
            Maps the result of ``prefix`` to the choreography of the
            remaining statements. ``prefix.bind(rest)`` is the whole
            program.
        """

        stop = len(self.statements)
        if not 0 <= i <= stop:
            raise IndexError(f"cannot split {stop} statements at {i}")
        arities = self.arities()

        prefix = Choreo(lambda at: self._steps(
            at, arities, 0, i, {}, UNIT,
            lambda env, last: pure((env, last))))

        def rest(result):
            env, last = result
            return Choreo(lambda at: self._steps(
                at, arities, i, stop, env, last,
                lambda env, last: pure(last)))

        return prefix, rest

    def _steps(self, at, arities, start, stop, env, last, finish):
        statements = self.statements

        def located_term(st, env):
            names = sorted(free_variables(st.term))

            def close(i, bound):
                if i == len(names):
                    return at.pure(st.sender, close_term(st.term, bound))
                return located_bind(env[names[i]],
                                    lambda v: close(i + 1,
                                                    {**bound, names[i]: v}))

            return close(0, {})

        def step(i, env, last):
            if i == stop:
                return finish(env, last)
            st = statements[i]
            t = located_term(st, env)

            def k(lv):
                if st.binder is None:
                    return step(i + 1, env, lv)
                return step(i + 1, {**env, st.binder: lv}, lv)

            return comm(st.sender, st.receiver, t, arities[i]).bind(k)

        return step(start, env, last)
