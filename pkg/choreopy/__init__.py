# local is imported first, arity descriptors are defined over its values
from . import local, effects, process, choreo, checker, runtime

__version__ = "0.1.0"
