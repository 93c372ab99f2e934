"""Velocity-space simulator for the homogeneous Landau collision operator.

The heavy lifting lives in the compiled extension `_landau`; this package
re-exports it and adds a small dict-based convenience wrapper around the
JSON run entry point.
"""

import json as _json

try:
    from landau._landau import *  # noqa: F401,F403  (installed layout)
    from landau._landau import run_json as _run_json
except ImportError:  # build-tree layout: extension on sys.path directly
    from _landau import *  # noqa: F401,F403
    from _landau import run_json as _run_json


def run(config):
    """Run a simulation from a configuration dict (see README for keys)."""
    return _run_json(_json.dumps(config))
