""" Exhaustive exploration of network interleavings.

Breadth-first search over `step_network`, memoized on canonical state keys.
Every reachable state without enabled steps is classified as terminal or
stuck; stuck states come with a shortest witness trace from the initial
state.
"""

import logging
from collections import deque
from dataclasses import dataclass

from choreopy.checker.network import NetworkState, step_network, stuck_causes
from choreopy.exceptions import LimitExceeded

logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 1_000_000
DEFAULT_MAX_DEPTH = 10_000


@dataclass(frozen=True)
class StuckState:
    state: NetworkState
    trace: tuple
    causes: tuple

    def __str__(self):
        return "; ".join(str(c) for c in self.causes)


@dataclass(frozen=True)
class ExplorationReport:
    """Result of an exhaustive exploration

    Parameters
    ----------
    states : int
        Distinct states reached, the initial one included.
    terminals : tuple of NetworkState
        Reachable states where every process finished and every buffer is
        empty.
    stuck : tuple of StuckState
        Reachable states with no enabled step that are not terminal.
    outcomes : tuple of dict
        Distinct observation maps of the terminal states.
    """
    states: int
    terminals: tuple
    stuck: tuple
    outcomes: tuple

    @property
    def deadlock_free(self):
        return not self.stuck

    @property
    def confluent(self):
        """At most one terminal observation map"""
        return len(self.outcomes) <= 1


def _trace(parents, key):
    steps = []
    while parents[key] is not None:
        key, step = parents[key]
        steps.append(step)
    return tuple(reversed(steps))


def explore(init, reg, max_states=DEFAULT_MAX_STATES,
            max_depth=DEFAULT_MAX_DEPTH):
    """Explore every interleaving of a network

    Parameters
    ----------
    init : NetworkState or dict
        Initial state, or a map from locations to processes.
    reg : PrimitiveRegistry
    max_states : int, optional
        Maximum number of distinct states.
    max_depth : int, optional
        Maximum number of steps from the initial state.

    Returns
    -------
    report : ExplorationReport

    Raises
    ------
    LimitExceeded
        If either limit is reached. The exploration is then inconclusive,
        no partial report is returned.
    """

    if max_states < 1 or max_depth < 1:
        raise ValueError("exploration limits must be positive")
    if not isinstance(init, NetworkState):
        init = NetworkState.initial(init)

    parents = {init.key(): None}
    frontier = deque([(init, init.key(), 0)])
    terminals = []
    stuck = []
    outcomes = {}

    while frontier:
        st, key, depth = frontier.popleft()
        successors = step_network(st, reg)

        if not successors:
            if st.terminal:
                terminals.append(st)
                outcomes.setdefault(tuple(sorted(st.observations.items())),
                                    dict(st.observations))
            else:
                stuck.append(StuckState(st, _trace(parents, key),
                                        tuple(stuck_causes(st))))
            continue

        if depth >= max_depth:
            raise LimitExceeded("depth", max_depth)

        for step, nxt in successors:
            nxt_key = nxt.key()
            if nxt_key in parents:
                continue
            if len(parents) >= max_states:
                raise LimitExceeded("states", max_states)
            parents[nxt_key] = (key, step)
            frontier.append((nxt, nxt_key, depth + 1))

    logger.info("explored %d states: %d terminal, %d stuck", len(parents),
                len(terminals), len(stuck))

    return ExplorationReport(len(parents), tuple(terminals), tuple(stuck),
                             tuple(outcomes.values()))
