from . import process
from .process import (PROCESS, Hole, Locally, Recv, Send, locally,
                      operations, recv, render, send)
