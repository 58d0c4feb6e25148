"""numba switch.

Set ``DESARGUES_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is installed.  The flag only selects an implementation; results are
identical either way.
"""

import os

DISABLE_FLAG = "DESARGUES_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get(DISABLE_FLAG, "").strip().lower() not in ("1", "true", "yes")

if HAVE_NUMBA and "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is often too old; skip the noisy probe
    numba.config.THREADING_LAYER = "workqueue"


def njit(fn=None, **options):
    """``numba.njit`` with caching on, or a no-op decorator without numba."""
    if not HAVE_NUMBA:  # pragma: no cover
        return fn if fn is not None else (lambda f: f)
    deco = numba.njit(cache=True, nogil=True, **options)
    return deco(fn) if fn is not None else deco


prange = numba.prange if HAVE_NUMBA else range
