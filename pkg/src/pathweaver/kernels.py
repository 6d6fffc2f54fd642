"""Kernel dispatch: compiled ``_core`` when available, else ``_pycore``.

Set ``PATHWEAVER_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _pycore

BACKEND = "python"
levenshtein = _pycore.levenshtein
hop_bounded_path = _pycore.hop_bounded_path

if not os.environ.get("PATHWEAVER_PURE"):
    try:
        from . import _core
    except ImportError:
        _core = None
    else:
        BACKEND = "cython"
        levenshtein = _core.levenshtein
        hop_bounded_path = _core.hop_bounded_path
else:
    _core = None

__all__ = ["BACKEND", "levenshtein", "hop_bounded_path"]
