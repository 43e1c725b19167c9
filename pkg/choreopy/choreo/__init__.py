from . import located, choreography, program, epp, syntax
from .located import (ABSENT, Focus, GlobalView, Located, Present,
                      absent_reads, focus, located_bind, located_map,
                      reset_absent_reads)
from .choreography import (CHOREO, Choreo, Comm, choreo_eval, comm,
                           local_at, locations)
from .program import Program, Statement
from .epp import epp, project_all
from .syntax import load_choreography, parse_choreography
