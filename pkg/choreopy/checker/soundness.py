""" Desk-scale soundness and completeness.

The choreographic semantics is deterministic, so the projected network is
correct when every maximal execution of it terminates and ends with the
observations the choreography produces. That rules out deadlocks
(no stuck states) and behaviours the choreography does not have (a
different terminal observation map), and requires the choreography's
behaviour to be reachable (at least one terminal state).
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from choreopy.checker.explore import (DEFAULT_MAX_DEPTH, DEFAULT_MAX_STATES,
                                      ExplorationReport, explore)
from choreopy.checker.network import NetworkState
from choreopy.choreo.choreography import choreo_eval, cross_comms, locations
from choreopy.choreo.epp import project_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check

    Parameters
    ----------
    holds : bool
    report : ExplorationReport
    expected : dict, optional
        Observation map of the choreographic semantics; None for networks
        that were not projected from a choreography.
    comms : int, optional
        Number of cross-location communications of the choreography.
    reasons : tuple of str
        Why the verdict does not hold.
    """
    holds: bool
    report: ExplorationReport
    expected: Optional[dict] = None
    comms: Optional[int] = None
    reasons: tuple = field(default=())

    @property
    def conserved(self):
        """Every terminal state sent and received exactly ``comms``
        messages"""
        return all(st.sent == st.received == self.comms
                   for st in self.report.terminals)

    def summary(self):
        status = "true" if self.holds else "false"
        lines = [f"verdict: {status}", f"states: {self.report.states}",
                 f"terminal states: {len(self.report.terminals)}"]
        lines += [f"reason: {r}" for r in self.reasons]
        for stuck in self.report.stuck[:1]:
            lines.append(f"stuck: {stuck}")
            lines.append("witness:")
            lines += [f"  {step}" for step in stuck.trace] or ["  (empty)"]
        return "\n".join(lines)


def _network_reasons(report):
    reasons = []
    if report.stuck:
        reasons.append(f"{len(report.stuck)} stuck state(s)")
    if not report.terminals:
        reasons.append("no terminal state")
    return reasons


def check_network(procs, reg, max_states=DEFAULT_MAX_STATES,
                  max_depth=DEFAULT_MAX_DEPTH):
    """Check a network that has no choreography behind it

    The verdict holds when the network is deadlock free, terminates and is
    confluent.
    """

    report = explore(NetworkState.initial(procs), reg, max_states, max_depth)
    reasons = _network_reasons(report)
    if not report.confluent:
        reasons.append(f"{len(report.outcomes)} distinct terminal outcomes")

    return Verdict(not reasons, report, reasons=tuple(reasons))


def check_soundness_completeness(c, reg, max_states=DEFAULT_MAX_STATES,
                                 max_depth=DEFAULT_MAX_DEPTH):
    """Check the projection of a choreography against its semantics

    Parameters
    ----------
    c : Choreo
    reg : PrimitiveRegistry
    max_states, max_depth : int, optional
        Exploration limits.

    Returns
    -------
    verdict : Verdict
        Holds iff the projected network has no stuck state, has a terminal
        state, every terminal observation map equals the choreography's, and
        every terminal state sent and received one message per
        cross-location communication.

    Raises
    ------
    LimitExceeded
        If the exploration hits a limit.
    """

    expected = choreo_eval(c, reg).observations
    procs = project_all(c, locations(c))
    report = explore(NetworkState.initial(procs), reg, max_states, max_depth)

    reasons = _network_reasons(report)
    for outcome in report.outcomes:
        if outcome != expected:
            reasons.append(f"terminal observations {outcome} differ from "
                           f"{expected}")
    verdict = Verdict(False, report, expected, cross_comms(c))
    if not verdict.conserved:
        reasons.append("messages not conserved")

    logger.info("verdict %s after %d states", not reasons, report.states)
    return Verdict(not reasons, report, expected, verdict.comms,
                   tuple(reasons))
