"""Enumeration kernel backends.

The compiled extension is preferred when it was built; otherwise the pure
Python twin is used. SACHS_KERNELS=pure|native|auto forces the choice.
"""

import os

from . import _pure

_choice = os.environ.get("SACHS_KERNELS", "auto")
if _choice not in {"auto", "native", "pure"}:
    raise RuntimeError(f"SACHS_KERNELS must be auto, native or pure, not {_choice!r}")

if _choice == "pure":
    _impl = _pure
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "native":
            raise
        _impl = _pure

BACKEND = _impl.BACKEND
MAX_ROWS = _pure.MAX_ROWS
MAX_COLS = _pure.MAX_COLS

inspect_rows = _impl.inspect_rows
canonical_rows = _impl.canonical_rows
is_canonical_rows = _impl.is_canonical_rows
rows_connected = _impl.rows_connected
rows_a4 = _impl.rows_a4
transpose_rows = _impl.transpose_rows


def available_backends() -> list[str]:
    names = ["pure"]
    try:
        from . import _native  # noqa: F401
        names.append("native")
    except ImportError:
        pass
    return names


def get_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "pure":
        return _pure
    if name == "native":
        from . import _native
        return _native
    raise ValueError(f"unknown backend {name!r}")
