"""Build-time helpers."""

import gc
from contextlib import contextmanager


@contextmanager
def gc_paused():
    """Suspend the cyclic collector across bulk node allocation.

    Index builds allocate millions of long-lived containers; letting the
    generational collector scan them mid-build roughly doubles build time.
    Reentrant: only the outermost use re-enables collection.
    """
    was_enabled = gc.isenabled()
    if was_enabled:
        gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()
