"""Numba availability and backend selection.

Set ``PRIMEGRAPH_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is importable.  The choice is made once, at import time.
"""

from __future__ import annotations

import os

_FALSEY = {"", "0", "false", "no", "off"}

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba ships in the dev environment
    numba = None
    HAVE_NUMBA = False

NUMBA_DISABLED = os.environ.get("PRIMEGRAPH_DISABLE_NUMBA", "").strip().lower() not in _FALSEY
USE_NUMBA = HAVE_NUMBA and not NUMBA_DISABLED


def njit(fn):
    """Compile ``fn`` in nopython mode if numba exists, else return it untouched."""
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
