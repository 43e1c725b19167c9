from . import driver, memory, wire, config, tcp
from .driver import Execution, drive, run_local
from .memory import run_in_memory
from .wire import decode, encode, frame
from .config import DeploymentConfig, read_deployment
from .tcp import run_tcp
