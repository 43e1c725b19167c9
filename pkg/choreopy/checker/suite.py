""" Randomized check suites.

`check_suite` checks one generated choreography per seed and gathers the
results in an xarray Dataset along a ``Seed`` dimension. The ``suite``
accessor summarises it.
"""

import logging

import numpy as np
import xarray as xr

from choreopy.array_accessor import ReportAccessorBase
from choreopy.checker.explore import DEFAULT_MAX_DEPTH, DEFAULT_MAX_STATES
from choreopy.checker.generate import gen_program
from choreopy.checker.soundness import check_soundness_completeness
from choreopy.choreo.choreography import locations
from choreopy.exceptions import LimitExceeded

logger = logging.getLogger(__name__)

SUITE_VARIABLES = ("states", "stuck", "terminals", "outcomes", "comms",
                   "enqueued", "dequeued", "verdict", "inconclusive")


def check_suite(seeds, num_locs=4, depth=6, max_states=DEFAULT_MAX_STATES,
                max_depth=DEFAULT_MAX_DEPTH):
    """Check one generated choreography per seed

    Parameters
    ----------
    seeds : array_like of int
    num_locs : int, optional
        Locations the generator draws from.
    depth : int, optional
        Statements per choreography.
    max_states, max_depth : int, optional
        Exploration limits per choreography.

    Returns
    -------
    report : xarray.Dataset
        Variables along ``Seed``: explored states, stuck and terminal state
        counts, distinct terminal outcomes, cross-location comms, the most
        messages enqueued and dequeued by a terminal state, the verdict, and
        whether a limit made the check inconclusive. The ``Locations``
        coordinate counts the locations each choreography mentions.
    """

    seeds = np.atleast_1d(np.asarray(seeds, dtype=int))
    rows = {name: [] for name in SUITE_VARIABLES}
    num_locations = []

    for seed in seeds:
        program = gen_program(int(seed), num_locs, depth)
        c = program.to_choreo()
        num_locations.append(len(locations(c)))
        try:
            verdict = check_soundness_completeness(c, program.registry,
                                                   max_states, max_depth)
        except LimitExceeded as err:
            logger.warning("seed %d is inconclusive: %s", seed, err)
            for name in SUITE_VARIABLES:
                rows[name].append(-1)
            rows["verdict"][-1] = False
            rows["inconclusive"][-1] = True
            continue

        report = verdict.report
        rows["states"].append(report.states)
        rows["stuck"].append(len(report.stuck))
        rows["terminals"].append(len(report.terminals))
        rows["outcomes"].append(len(report.outcomes))
        rows["comms"].append(verdict.comms)
        rows["enqueued"].append(max((st.sent for st in report.terminals),
                                    default=0))
        rows["dequeued"].append(max((st.received for st in report.terminals),
                                    default=0))
        rows["verdict"].append(verdict.holds)
        rows["inconclusive"].append(False)

    data_vars = {name: ("Seed", np.array(values))
                 for name, values in rows.items()}
    data_vars["verdict"] = ("Seed", np.array(rows["verdict"], dtype=bool))
    data_vars["inconclusive"] = ("Seed", np.array(rows["inconclusive"],
                                                  dtype=bool))

    return xr.Dataset(data_vars=data_vars,
                      coords={"Seed": seeds,
                              "Locations": ("Seed", num_locations)})


@xr.register_dataset_accessor("suite")
class SuiteAccessor(ReportAccessorBase):

    def failures(self):
        """Seeds whose verdict does not hold"""
        return self.runs(~self._obj["verdict"].values)

    def conserved(self):
        """Whether every conclusive run enqueued and dequeued exactly one
        message per cross-location comm"""
        report = self._obj.sel(Seed=self.runs(~self._obj["inconclusive"]
                                              .values))
        return bool(((report["enqueued"] == report["comms"])
                     & (report["dequeued"] == report["comms"])).all())
