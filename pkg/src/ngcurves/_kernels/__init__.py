"""Kernel lane selection.

The hot per-curve loops live in a small compiled extension with a pure-Python
twin.  The compiled lane is used when available; set ``NGCURVES_PURE=1`` to
force the fallback.  Both lanes return bit-identical results.
"""

import os

from . import pure

if os.environ.get("NGCURVES_PURE") == "1":
    _active = pure
else:
    try:
        from . import _fast as _active  # type: ignore[no-redef]
    except ImportError:
        _active = pure

UNREACHABLE = pure.UNREACHABLE

min_summands = _active.min_summands
extend_min_summands = _active.extend_min_summands
largest_gap = _active.largest_gap
least_member_per_class = _active.least_member_per_class
b_tilde_residues = _active.b_tilde_residues
canonical_box = _active.canonical_box
non_cm_witness = _active.non_cm_witness


def backend() -> str:
    """Name of the active lane: "cython" or "pure"."""
    return "pure" if _active is pure else "cython"
