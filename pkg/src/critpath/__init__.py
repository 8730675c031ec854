"""critpath: trace-driven CPU performance modeling via event dependence graphs.

A program's dynamic execution on a modeled core is expressed as a DAG whose
vertices are per-instruction pipeline events and whose weighted edges are
minimum latency lags between them.  The length of the longest path is the
modeled execution time; edge weights are vectors so several machine
configurations can be evaluated in one pass.
"""

__version__ = "0.1.0"
