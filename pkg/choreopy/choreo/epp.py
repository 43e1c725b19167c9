""" Endpoint projection.

Projection is a handler: the choreography is instantiated with the focus of
the target location and each Comm is folded into the process operations
that location performs for it.

======================  =========================================
target is               operations
======================  =========================================
sender and receiver     locally t
sender only             locally t, then send the result
receiver only           recv from the sender
neither                 none
======================  =========================================
"""

import logging
import warnings

from choreopy.choreo.choreography import Comm, locations
from choreopy.choreo.located import ABSENT, Located, Present, focus
from choreopy.effects.term import bind, interp, pure
from choreopy.exceptions import MissingLocation
from choreopy.process.process import locally, recv, send

logger = logging.getLogger(__name__)


def projection_algebra(location):
    """Handler projecting Comm operations at ``location``"""

    def alg(op, k):
        if not isinstance(op, Comm):
            raise TypeError(f"cannot project {op!r}")
        s, r = op.sender, op.receiver

        if location == s and location == r:
            return bind(locally(op.computation.content.value),
                        lambda v: k(Located(r, Present(v))))

        if location == s:
            return bind(locally(op.computation.content.value),
                        lambda v: bind(send(r, v),
                                       lambda _: k(Located(r, ABSENT))))

        if location == r:
            return bind(recv(s, op.expected),
                        lambda v: k(Located(r, Present(v))))

        return k(Located(r, ABSENT))

    return alg


def epp(c, location):
    """Project a choreography to the process of one location

    Parameters
    ----------
    c : Choreo
    location : str

    Returns
    -------
    process : Term
        Process over the PROCESS signature. Its result is the choreography's
        result, erased unless ``location`` owns it.
    """

    return interp(projection_algebra(location), pure, c(focus(location)))


def project_all(c, locs):
    """Project a choreography at every location of ``locs``

    Raises
    ------
    MissingLocation
        If the choreography mentions a location not in ``locs``.
    """

    mentioned = locations(c)
    missing = [loc for loc in mentioned if loc not in locs]
    if missing:
        raise MissingLocation(missing)

    for loc in locs:
        if loc not in mentioned:
            warnings.warn(f"location '{loc}' does not occur in the "
                          "choreography, its process is empty")

    logger.debug("projecting at %s", ", ".join(locs))
    return {loc: epp(c, loc) for loc in locs}
