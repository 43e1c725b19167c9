""" Local language.

A first-order, loop-free expression language used for the computations each
location performs on its own. Terms are literals, variables, primitive
applications and let bindings; primitives live in an immutable
PrimitiveRegistry. Evaluation is big-step, deterministic and total on
closed, well-formed terms.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from choreopy.effects.arity import ANY, BOOL, INT, STR, Arity, arity_of
from choreopy.exceptions import (ArityMismatch, DuplicatePrimitive,
                                 PrimitiveTypeError, UnboundVariable,
                                 UnknownPrimitive)
from choreopy.local.value import (Bool, Int, List, Pair, Str, Value)

logger = logging.getLogger(__name__)


class LocalTerm:
    """Base class of local-language expressions"""

    __slots__ = ()


@dataclass(frozen=True)
class Lit(LocalTerm):
    value: Any

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Var(LocalTerm):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PrimApp(LocalTerm):
    fn: str
    args: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def __str__(self):
        return "(" + " ".join([self.fn] + [str(a) for a in self.args]) + ")"


@dataclass(frozen=True)
class Let(LocalTerm):
    name: str
    bound: LocalTerm
    body: LocalTerm

    def __str__(self):
        return f"(let {self.name} {self.bound} {self.body})"


@dataclass(frozen=True)
class Primitive:
    """A registered primitive

    Built-in primitives carry a Python ``fn`` over a list of Values;
    user-defined ones carry ``params`` and a ``body`` evaluated in the
    calling registry. ``returns`` is the result arity (None for "same as the
    first argument"), and ``observable`` marks primitives whose results are
    recorded as observations.
    """
    name: str
    arity: int
    fn: Optional[Callable] = None
    params: tuple = ()
    body: Optional[LocalTerm] = None
    returns: Optional[Arity] = ANY
    observable: bool = False


@dataclass(frozen=True)
class Evaluation:
    value: Value
    shown: tuple = ()


DEFAULT_INPUT = Int(0)


class PrimitiveRegistry:
    """Immutable map from primitive names to primitives

    Parameters
    ----------
    primitives : dict, optional
        Map from names to Primitive.
    inputs : dict, optional
        Map from locations to the value the ``input`` primitive yields there.
    """

    def __init__(self, primitives=None, inputs=None):
        self._primitives = dict(primitives or {})
        self._inputs = dict(inputs or {})

    def __contains__(self, name):
        return name in self._primitives

    def __getitem__(self, name):
        try:
            return self._primitives[name]
        except KeyError:
            raise UnknownPrimitive(name) from None

    def names(self):
        return tuple(self._primitives)

    @property
    def inputs(self):
        return dict(self._inputs)

    def register(self, primitive):
        if primitive.name in self._primitives:
            raise DuplicatePrimitive(primitive.name)
        primitives = dict(self._primitives)
        primitives[primitive.name] = primitive
        return PrimitiveRegistry(primitives, self._inputs)

    def with_input(self, location, value):
        """Registry where ``input`` yields ``value`` at ``location``"""
        inputs = dict(self._inputs)
        inputs[location] = value
        return PrimitiveRegistry(self._primitives, inputs)

    def input_for(self, location):
        return self._inputs.get(location, DEFAULT_INPUT)

    def at(self, location):
        """Registry as seen from one location

        The ``input`` primitive is bound to the location's configured input.
        """

        value = self.input_for(location)
        primitives = dict(self._primitives)
        primitives["input"] = Primitive("input", 0, lambda args: value,
                                        returns=arity_of(value))
        return PrimitiveRegistry(primitives, self._inputs)


def register_primitive(reg, name, arity, fn, returns=ANY, observable=False):
    """Return a new registry with an added built-in primitive

    Parameters
    ----------
    reg : PrimitiveRegistry
    name : str
    arity : int
        Number of arguments.
    fn : callable
        Pure function from a list of Values to a Value.
    returns : Arity, optional
        Arity of the result, used by `infer_arity`.
    observable : bool, optional
        Whether results are recorded as observations.

    Returns
    -------
    reg : PrimitiveRegistry
        New registry; ``reg`` is unchanged.
    """

    return reg.register(Primitive(name, arity, fn=fn, returns=returns,
                                  observable=observable))


def define_primitive(reg, name, params, body):
    """Return a new registry with a primitive defined by a local term

    ``body`` may mention the parameters and any primitive of ``reg``.
    """

    params = tuple(params)
    env = {p: ANY for p in params}
    returns = infer_arity(body, reg, env)
    return reg.register(Primitive(name, len(params), params=params,
                                  body=body, returns=returns))


def _ints(name, args):
    for a in args:
        if not isinstance(a, Int):
            raise PrimitiveTypeError(name, a)
    return [a.i for a in args]


def _add(args):
    a, b = _ints("add", args)
    return Int(a + b)


def _sub(args):
    a, b = _ints("sub", args)
    return Int(a - b)


def _mul(args):
    a, b = _ints("mul", args)
    return Int(a * b)


def _concat(args):
    a, b = args
    if isinstance(a, Str) and isinstance(b, Str):
        return Str(a.s + b.s)
    if isinstance(a, List) and isinstance(b, List):
        return List(a.items + b.items)
    raise PrimitiveTypeError("concat", b if type(a) in (Str, List) else a)


def _fst(args):
    p, = args
    if not isinstance(p, Pair):
        raise PrimitiveTypeError("fst", p)
    return p.fst


def _snd(args):
    p, = args
    if not isinstance(p, Pair):
        raise PrimitiveTypeError("snd", p)
    return p.snd


def _show(args):
    v, = args
    logger.info("show %s", v)
    return v


def default_registry():
    """Registry with the built-in primitives

    add, sub, mul, eq, concat, fst, snd, pair, input and show. ``input``
    yields the configured input of the evaluating location (Int 0 when none
    is configured) and ``show`` is the identity, recording its argument as
    an observation.
    """

    reg = PrimitiveRegistry()
    reg = register_primitive(reg, "add", 2, _add, returns=INT)
    reg = register_primitive(reg, "sub", 2, _sub, returns=INT)
    reg = register_primitive(reg, "mul", 2, _mul, returns=INT)
    reg = register_primitive(reg, "eq", 2, lambda args: Bool(args[0] == args[1]),
                             returns=BOOL)
    reg = register_primitive(reg, "concat", 2, _concat, returns=None)
    reg = register_primitive(reg, "fst", 1, _fst)
    reg = register_primitive(reg, "snd", 1, _snd)
    reg = register_primitive(reg, "pair", 2, lambda args: Pair(*args))
    reg = register_primitive(reg, "input", 0, lambda args: DEFAULT_INPUT,
                             returns=INT)
    reg = register_primitive(reg, "show", 1, _show, returns=None,
                             observable=True)
    return reg


class _Evaluator:

    def __init__(self, reg):
        self.reg = reg
        self.shown = []

    def eval(self, t, env):
        if isinstance(t, Lit):
            return t.value
        if isinstance(t, Var):
            try:
                return env[t.name]
            except KeyError:
                raise UnboundVariable(t.name) from None
        if isinstance(t, Let):
            bound = self.eval(t.bound, env)
            return self.eval(t.body, {**env, t.name: bound})
        if isinstance(t, PrimApp):
            prim = self.reg[t.fn]
            if len(t.args) != prim.arity:
                raise ArityMismatch(t.fn, prim.arity, len(t.args))
            args = [self.eval(a, env) for a in t.args]
            if prim.body is not None:
                result = self.eval(prim.body, dict(zip(prim.params, args)))
            else:
                result = prim.fn(args)
            if prim.observable:
                self.shown.append(result)
            return result

        raise TypeError(f"not a local term: {t!r}")


def eval_traced(t, env, reg):
    """Evaluate a local term, also returning the values it showed

    Parameters
    ----------
    t : LocalTerm
    env : dict
        Map from variable names to Values; never modified.
    reg : PrimitiveRegistry

    Returns
    -------
    evaluation : Evaluation
        Result value and the tuple of observed values, in order.
    """

    evaluator = _Evaluator(reg)
    value = evaluator.eval(t, env)
    return Evaluation(value, tuple(evaluator.shown))


def eval_local(t, env, reg):
    """Evaluate a local term to a Value"""
    return eval_traced(t, env, reg).value


def free_variables(t):
    """Names occurring free in a local term, in first-occurrence order"""

    if isinstance(t, Var):
        return (t.name,)
    if isinstance(t, Let):
        inner = tuple(n for n in free_variables(t.body) if n != t.name)
        return tuple(dict.fromkeys(free_variables(t.bound) + inner))
    if isinstance(t, PrimApp):
        names = ()
        for a in t.args:
            names += free_variables(a)
        return tuple(dict.fromkeys(names))
    return ()


def close_term(t, env):
    """Bind the free variables of ``t`` found in ``env`` with let
    expressions"""

    for name in sorted(set(free_variables(t)) & set(env)):
        t = Let(name, Lit(env[name]), t)
    return t


def infer_arity(t, reg, env=None):
    """Statically infer the arity descriptor of a term's result

    Unknown or mixed results infer to the ``value`` descriptor. Primitives
    defined by a local term are re-inferred against ``reg`` with their
    parameters bound to the inferred argument arities, so a definition
    reading ``input`` follows the input bound in ``reg``.
    """

    return _infer(t, reg, env or {}, frozenset())


def _infer(t, reg, env, expanding):
    if isinstance(t, Lit):
        return arity_of(t.value)
    if isinstance(t, Var):
        return env.get(t.name, ANY)
    if isinstance(t, Let):
        bound = _infer(t.bound, reg, env, expanding)
        return _infer(t.body, reg, {**env, t.name: bound}, expanding)
    if isinstance(t, PrimApp):
        if t.fn not in reg:
            return ANY
        prim = reg[t.fn]
        if prim.body is not None:
            # self-referencing definitions never terminate
            if prim.name in expanding:
                return ANY
            args = {p: _infer(a, reg, env, expanding)
                    for p, a in zip(prim.params, t.args)}
            return _infer(prim.body, reg, args, expanding | {prim.name})
        if prim.returns is not None:
            return prim.returns
        if t.args:
            return _infer(t.args[0], reg, env, expanding)
    return ANY
