""" In-memory runtime.

Every location runs in its own thread; each ordered pair of locations has a
FIFO queue. A watchdog bounds the whole run.
"""

import logging
import queue
import threading
import time

from choreopy.exceptions import HungRuntime, MissingLocation
from choreopy.runtime.driver import Channel, drive

logger = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 10.0
POLL_INTERVAL = 0.05


class _Stopped(Exception):
    pass


class QueueChannel(Channel):

    def __init__(self, location, queues, stop):
        self.location = location
        self.queues = queues
        self.stop = stop

    def send(self, to, value):
        try:
            channel = self.queues[(self.location, to)]
        except KeyError:
            raise MissingLocation([to]) from None
        channel.put(value)

    def recv(self, source):
        try:
            channel = self.queues[(source, self.location)]
        except KeyError:
            raise MissingLocation([source]) from None
        while True:
            try:
                return channel.get(timeout=POLL_INTERVAL)
            except queue.Empty:
                if self.stop.is_set():
                    raise _Stopped()


def run_in_memory(procs, reg, timeout=DEFAULT_TIMEOUT):
    """Run a network of processes concurrently

    Parameters
    ----------
    procs : dict
        Map from locations to processes.
    reg : PrimitiveRegistry
    timeout : float, optional
        Seconds after which still-running processes are abandoned.

    Returns
    -------
    observations : dict
        Map from each location to the list of values it showed.

    Raises
    ------
    HungRuntime
        If some process is still running when the timeout expires.
    ChoreoError
        The first error raised by a process, by location order.
    """

    locs = list(procs)
    queues = {(s, r): queue.Queue() for s in locs for r in locs}
    stop = threading.Event()
    results = {}
    errors = {}

    def worker(loc):
        try:
            channel = QueueChannel(loc, queues, stop)
            results[loc] = drive(procs[loc], loc, reg, channel).observations
        except _Stopped:
            logger.info("%s stopped", loc)
        except Exception as err:
            errors[loc] = err
            stop.set()

    threads = [threading.Thread(target=worker, args=(loc,),
                                name=f"choreopy-{loc}", daemon=True)
               for loc in locs]
    for thread in threads:
        thread.start()

    deadline = time.monotonic() + timeout
    for thread in threads:
        thread.join(max(0.0, deadline - time.monotonic()))
    pending = [loc for loc, thread in zip(locs, threads) if thread.is_alive()]
    stop.set()

    if errors:
        raise errors[sorted(errors)[0]]
    if pending:
        raise HungRuntime(timeout, pending)

    return {loc: results[loc] for loc in locs}
