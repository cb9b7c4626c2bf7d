import json

from ._umac import (
    ConfigError,
    InvariantViolation,
    RootSystem,
    Spec,
    construct,
    gram_schmidt,
)
from ._umac import run_json as _run_json

__all__ = ["ConfigError", "InvariantViolation", "RootSystem", "Spec", "construct", "gram_schmidt", "run"]


def run(type="A", rank=1, pair="self", g_short="7/10", g_long=None, c=2, suites=("mass",), **extra):
    """Run verification suites and return the report as a dict."""
    cfg = {
        "type": type,
        "rank": rank,
        "pair": pair,
        "g_short": str(g_short),
        "g_long": str(g_long if g_long is not None else g_short),
        "c": c,
        "suites": list(suites),
    }
    cfg.update(extra)
    return json.loads(_run_json(json.dumps(cfg)))
