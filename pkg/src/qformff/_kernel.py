"""Kernel backend selection.

Imports the compiled Cython kernel when it is built, otherwise the pure
Python twin.  ``QFORMFF_PURE=1`` in the environment forces the fallback.
"""

import os

if os.environ.get("QFORMFF_PURE"):
    from qformff._gfcore_py import GFContext

    BACKEND = "pure"
else:
    try:
        from qformff._gfcore import GFContext  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from qformff._gfcore_py import GFContext  # type: ignore[no-redef]

        BACKEND = "pure"

__all__ = ["GFContext", "BACKEND"]
