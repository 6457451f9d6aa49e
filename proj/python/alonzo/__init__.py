"""Python access to the Alonzo theory tools.

Commands mirror the ``alonzo`` executable and return a ``CommandResult`` with
``exit_code``, ``out`` and ``err``. ``sources`` maps file names to text and is
consulted before the disk, so whole workspaces can be checked in memory.
"""

import json

from ._alonzo import (
    CommandResult,
    bundled_file,
    check,
    compact,
    countermodel,
    graph_stats,
    holds_in,
    latex,
    render,
    theories,
    transport,
    type_of,
)

__all__ = [
    "CommandResult",
    "bundled_file",
    "check",
    "compact",
    "countermodel",
    "graph_stats",
    "holds_in",
    "latex",
    "render",
    "stats",
    "theories",
    "transport",
    "type_of",
]


def stats(graph=None, **kwargs):
    """``graph_stats`` parsed into a dict; raises on a failed check."""
    result = graph_stats(graph, **kwargs)
    if result.exit_code != 0:
        raise ValueError(result.err.strip())
    return json.loads(result.out)
