"""Closed-form and numerical studies of a growth-fragmentation equation.

The heavy lifting lives in the compiled extension; this package just
re-exports it under a stable name.
"""

try:
    from growfrag._growfrag import *  # noqa: F401,F403  (installed layout)
    from growfrag._growfrag import __doc__ as _doc
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _growfrag import *  # noqa: F401,F403
    from _growfrag import __doc__ as _doc

__doc__ = _doc
__version__ = "1.0.0"
