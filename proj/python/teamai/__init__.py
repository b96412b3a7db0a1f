"""Optimal AI replacement strategies for sequential teams with peer monitoring.

Thin wrapper around the compiled extension. Everything lives in the
extension module; this package just re-exports it under a stable name.
"""

try:
    from ._teamai import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension sits next to the package
    from _teamai import *  # noqa: F401,F403

__version__ = "1.0.0"
