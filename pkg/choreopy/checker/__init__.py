from . import network, explore, soundness, generate, suite, syntax
from .network import NetworkState, step_network, stuck_causes
from .explore import ExplorationReport, explore as explore_network
from .soundness import Verdict, check_network, check_soundness_completeness
from .generate import gen_choreo, gen_program
from .suite import check_suite
from .syntax import load_network, parse_network
