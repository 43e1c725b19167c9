""" Deployment configuration.

A deployment file lists one location per line as ``<loc> <host> <port>``;
``#`` starts a comment::

    # pipeline on one machine
    Alice  127.0.0.1  9001
    Bob    127.0.0.1  9002
    Carol  127.0.0.1  9003
"""

import io
from dataclasses import dataclass

import numpy as np
import pandas as pd

from choreopy.exceptions import ConfigError

COLUMNS = ["location", "host", "port"]


@dataclass(frozen=True)
class DeploymentConfig:
    """Addresses of every location, seen from ``location``

    Parameters
    ----------
    peers : dict
        Map from locations to (host, port).
    location : str
        The location this process runs.
    """
    peers: dict
    location: str

    def __post_init__(self):
        validate(pd.DataFrame(
            [(loc, host, port) for loc, (host, port) in self.peers.items()],
            columns=COLUMNS), self.location)

    def address(self, loc):
        try:
            return self.peers[loc]
        except KeyError:
            raise ConfigError(f"no address for location '{loc}'") from None

    @property
    def own_address(self):
        return self.address(self.location)


def validate(frame, location):
    """Check a deployment table

    Raises
    ------
    ConfigError
        On missing fields, ports outside 1..65535, repeated locations or
        (host, port) pairs, or when ``location`` is not listed.
    """

    if frame[COLUMNS].isna().values.any():
        raise ConfigError("every line needs a location, a host and a port")

    ports = pd.to_numeric(frame["port"], errors="coerce")
    bad = frame["port"][ports.isna() | (ports < 1) | (ports > 65535)
                        | (ports != np.floor(ports))]
    if len(bad):
        raise ConfigError(f"invalid port '{bad.iloc[0]}', expected an "
                          "integer between 1 and 65535")

    repeated = frame["location"][frame["location"].duplicated()]
    if len(repeated):
        raise ConfigError(f"location '{repeated.iloc[0]}' is listed twice")

    clashes = frame[frame.assign(port=ports).duplicated(["host", "port"])]
    if len(clashes):
        row = clashes.iloc[0]
        raise ConfigError(f"{row['host']}:{row['port']} is used by more than "
                          "one location")

    if location not in set(frame["location"]):
        raise ConfigError(f"location '{location}' is not in the deployment")


def read_deployment(source, location):
    """Read a deployment file

    Parameters
    ----------
    source : str, path or file-like
        Deployment file, or its text when it contains a newline.
    location : str
        The location this process runs.

    Returns
    -------
    config : DeploymentConfig
    """

    if isinstance(source, str) and "\n" in source:
        source = io.StringIO(source)
    try:
        frame = pd.read_csv(source, sep=r"\s+", comment="#", header=None,
                            names=COLUMNS, index_col=False, dtype=str,
                            encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise ConfigError("deployment file is empty") from None
    except pd.errors.ParserError as err:
        raise ConfigError(f"malformed deployment file: {err}") from None

    validate(frame, location)
    peers = {row.location: (row.host, int(row.port))
             for row in frame.itertuples(index=False)}

    return DeploymentConfig(peers, location)
