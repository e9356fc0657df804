"""Python access to the digrev toolkit.

Digraphs cross the boundary as JSON text in the same format the CLI reads.
"""

import json

from . import _digrev
from ._digrev import DigrevError, suite_names

__all__ = ["DigrevError", "chi", "edge_connectivity", "reach", "reduce", "run_cli", "suite_names"]


def _text(graph):
    return graph if isinstance(graph, str) else json.dumps(graph)


def run_cli(args, stdin=""):
    """Returns (exit_code, stdout, stderr)."""
    return _digrev.run_cli(list(args), stdin)


def chi(graph):
    value, coloring = _digrev.chi(_text(graph))
    return value, json.loads(coloring)


def edge_connectivity(graph, u, v):
    return _digrev.edge_connectivity(_text(graph), u, v)


def reach(graph, target):
    """Edge-disjoint cycle list turning graph into target, or None."""
    seq = _digrev.reach(_text(graph), _text(target))
    return None if seq is None else json.loads(seq)


def reduce(graph):
    seq, final = _digrev.reduce(_text(graph))
    return json.loads(seq), json.loads(final)
