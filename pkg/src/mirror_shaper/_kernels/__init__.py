"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure NumPy module when the
extension is missing. MIRROR_SHAPER_KERNEL={compiled,pure} forces a backend
(used by the benchmark and the backend-equivalence tests); forcing "compiled"
when the extension is absent is an import error on purpose.
"""

import os

from . import pure

_forced = os.environ.get("MIRROR_SHAPER_KERNEL")

if _forced == "pure":
    impl = pure
elif _forced == "compiled":
    from . import _fast as impl  # type: ignore[no-redef]
else:
    try:
        from . import _fast as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

BACKEND = impl.BACKEND_NAME

encode = impl.encode
dot_at = impl.dot_at
update_step = impl.update_step


def get_backend(name):
    """Return a specific backend module by name ('pure' or 'compiled')."""
    if name == "pure":
        return pure
    if name == "compiled":
        from . import _fast

        return _fast
    raise ValueError(f"unknown kernel backend: {name!r}")
