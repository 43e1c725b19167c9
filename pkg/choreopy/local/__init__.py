from . import value, lang, syntax
from .value import UNIT, Bool, Int, List, Pair, Str, Unit, Value, from_python
from .lang import (Let, Lit, PrimApp, PrimitiveRegistry, Var, default_registry,
                   define_primitive, eval_local, eval_traced, register_primitive)
from .syntax import parse_local
