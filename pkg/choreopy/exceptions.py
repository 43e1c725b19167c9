""" Errors raised across choreopy.

Every error derives from ChoreoError and from the closest builtin exception,
so callers may catch either.
"""


class ChoreoError(Exception):
    """Base class of every choreopy error"""


class SignatureError(ChoreoError, TypeError):
    """An operation payload was performed outside its signature"""


class ScriptTypeMismatch(ChoreoError, TypeError):
    """A probe response violates the arity of the operation it answers"""

    def __init__(self, op, response):
        self.op = op
        self.response = response
        super().__init__(f"response {response!r} does not conform to the "
                         f"arity of {op!r}")


class UnboundVariable(ChoreoError, NameError):

    def __init__(self, name):
        self.name = name
        super().__init__(f"unbound variable '{name}'")


class UnknownPrimitive(ChoreoError, LookupError):

    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown primitive '{name}'")


class ArityMismatch(ChoreoError, TypeError):

    def __init__(self, name, expected, got):
        self.name = name
        self.expected = expected
        self.got = got
        super().__init__(f"primitive '{name}' takes {expected} argument(s), "
                         f"got {got}")


class PrimitiveTypeError(ChoreoError, TypeError):
    """A primitive was applied to a value of the wrong kind"""

    def __init__(self, primitive, value):
        self.primitive = primitive
        self.value = value
        super().__init__(f"primitive '{primitive}' cannot be applied to "
                         f"{value}")


class DuplicatePrimitive(ChoreoError, ValueError):

    def __init__(self, name):
        self.name = name
        super().__init__(f"primitive '{name}' is already registered")


class ParseError(ChoreoError, ValueError):
    """Malformed surface syntax, located by line and column"""

    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


class OwnershipError(ChoreoError, ValueError):
    """A located value was used at a location that does not own it"""


class MissingLocation(ChoreoError, ValueError):

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__("choreography mentions locations not given: "
                         + ", ".join(self.missing))


class LocalEvaluationError(ChoreoError):
    """A local computation failed at the given location"""

    def __init__(self, location, cause):
        self.location = location
        self.cause = cause
        super().__init__(f"at {location}: {cause}")


class LimitExceeded(ChoreoError, RuntimeError):
    """Exploration stopped at a limit; the verdict is inconclusive"""

    def __init__(self, kind, limit):
        self.kind = kind
        self.limit = limit
        super().__init__(f"exploration exceeded the {kind} limit ({limit})")


class RecvTypeMismatch(ChoreoError, TypeError):

    def __init__(self, location, source, expected, got):
        self.location = location
        self.source = source
        self.expected = expected
        self.got = got
        super().__init__(f"{location} expected {expected} from {source}, "
                         f"got {got}")


class HungRuntime(ChoreoError, TimeoutError):
    """The watchdog expired before every process finished"""

    def __init__(self, timeout, pending=()):
        self.timeout = timeout
        self.pending = tuple(pending)
        super().__init__(f"processes still running after {timeout} s: "
                         + ", ".join(self.pending))


class ConnectFailed(ChoreoError, ConnectionError):

    def __init__(self, peer, cause):
        self.peer = peer
        self.cause = cause
        super().__init__(f"could not connect to {peer}: {cause}")


class FrameTooLarge(ChoreoError, ValueError):

    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"frame of {size} bytes exceeds the {limit} byte "
                         "limit")


class DecodeError(ChoreoError, ValueError):
    """Bytes that are not exactly one serialized value"""


class HandshakeMismatch(ChoreoError, ConnectionError):
    """A peer introduced itself with an unexpected location name"""


class ConfigError(ChoreoError, ValueError):
    """Invalid deployment configuration"""
