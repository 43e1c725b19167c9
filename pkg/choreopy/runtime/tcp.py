""" TCP runtime.

Each location listens on its configured port. The first time it sends to a
peer it opens a connection and introduces itself with one frame carrying its
own name; every later frame on that connection is one message. A receiver
files incoming frames in one FIFO per sender, so the order of messages from
a fixed sender is preserved.
"""

import logging
import queue
import socket
import socketserver
import threading
import time

from choreopy.exceptions import (ChoreoError, ConnectFailed, HandshakeMismatch,
                                 HungRuntime)
from choreopy.local.value import Str
from choreopy.runtime.driver import Channel, drive
from choreopy.runtime.memory import DEFAULT_TIMEOUT, POLL_INTERVAL
from choreopy.runtime.wire import read_value, write_value

logger = logging.getLogger(__name__)

CONNECT_ATTEMPTS = 5
CONNECT_BACKOFF = 0.2


class _InboundHandler(socketserver.BaseRequestHandler):
    """Reads the frames of one inbound connection"""

    def handle(self):
        channel = self.server.channel
        try:
            hello = read_value(self.request)
            if hello is None:
                return
            if not isinstance(hello, Str) or hello.s not in channel.peers:
                raise HandshakeMismatch(f"unexpected handshake {hello}")
            peer = hello.s
            logger.debug("%s accepted a connection from %s",
                         channel.location, peer)
            while True:
                v = read_value(self.request)
                if v is None:
                    break
                channel.inbox(peer).put(v)
        except (ChoreoError, OSError) as err:
            channel.fail(err)
        except Exception as err:
            logger.exception("%s dropped the connection from %s",
                             channel.location, self.client_address)
            channel.fail(err)


class _Listener(socketserver.ThreadingTCPServer):
    daemon_threads = True
    allow_reuse_address = True

    def __init__(self, address, channel):
        self.channel = channel
        super().__init__(address, _InboundHandler)


class TcpChannel(Channel):
    """Channel of one location over TCP

    Parameters
    ----------
    config : DeploymentConfig
    timeout : float, optional
        Seconds a receive may wait before the run is declared hung.
    """

    def __init__(self, config, timeout=DEFAULT_TIMEOUT):
        self.config = config
        self.location = config.location
        self.peers = config.peers
        self.timeout = timeout
        self._inboxes = {loc: queue.Queue() for loc in config.peers}
        self._outbound = {}
        self._errors = []
        self._lock = threading.Lock()

        self._server = _Listener(config.own_address, self)
        self._thread = threading.Thread(target=self._server.serve_forever,
                                        name=f"choreopy-listen-{self.location}",
                                        daemon=True)
        self._thread.start()
        logger.info("%s listening on %s:%d", self.location,
                    *config.own_address)

    def inbox(self, peer):
        return self._inboxes[peer]

    def fail(self, err):
        with self._lock:
            self._errors.append(err)

    def _raise_failure(self):
        with self._lock:
            if self._errors:
                raise self._errors[0]

    def _connect(self, peer):
        if peer in self._outbound:
            return self._outbound[peer]

        address = self.config.address(peer)
        cause = None
        for attempt in range(CONNECT_ATTEMPTS):
            try:
                sock = socket.create_connection(address, timeout=self.timeout)
                break
            except OSError as err:
                cause = err
                logger.debug("%s could not reach %s (attempt %d): %s",
                             self.location, peer, attempt + 1, err)
                time.sleep(CONNECT_BACKOFF)
        else:
            raise ConnectFailed(peer, cause)

        write_value(sock, Str(self.location))
        self._outbound[peer] = sock
        return sock

    def send(self, to, value):
        if to == self.location:
            self.inbox(to).put(value)
            return
        write_value(self._connect(to), value)

    def recv(self, source):
        inbox = self.inbox(source)
        deadline = time.monotonic() + self.timeout
        while True:
            self._raise_failure()
            try:
                return inbox.get(timeout=POLL_INTERVAL)
            except queue.Empty:
                if time.monotonic() > deadline:
                    raise HungRuntime(self.timeout, [self.location])

    def close(self):
        for sock in self._outbound.values():
            sock.close()
        self._outbound.clear()
        self._server.shutdown()
        self._server.server_close()


def run_tcp(proc, cfg, reg, timeout=DEFAULT_TIMEOUT):
    """Run the process of one location over TCP

    Parameters
    ----------
    proc : Term
        Process of ``cfg.location``.
    cfg : DeploymentConfig
    reg : PrimitiveRegistry
    timeout : float, optional
        Seconds any single receive may wait.

    Returns
    -------
    observations : list
        Values the process showed.

    Raises
    ------
    ConnectFailed
        If a peer cannot be reached after the connection retries.
    HungRuntime
        If a receive waits longer than ``timeout``.
    """

    channel = TcpChannel(cfg, timeout)
    try:
        return drive(proc, cfg.location, reg, channel).observations
    finally:
        channel.close()
