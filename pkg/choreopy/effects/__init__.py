from . import arity, term
from .term import (Leaf, Node, Probe, STARVED, Signature, bind, interp,
                   observe, perform, probe, probe_equivalent, pure)
