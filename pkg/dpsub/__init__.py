# Some scripts to be run when dpsub is loaded

from . import checks, graph, instance, subgraph, utils
from . import construction, generators, io, oracle
