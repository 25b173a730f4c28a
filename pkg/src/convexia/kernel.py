"""Kernel backend selection.

The compiled extension `_fastcore` is preferred; the pure-Python module
`_purecore` is the drop-in fallback.  Set CONVEXIA_PURE=1 to force the
fallback (used by the parity tests and the benchmark).
"""

import os

if os.environ.get("CONVEXIA_PURE") == "1":
    from . import _purecore as _impl
else:
    try:
        from . import _fastcore as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purecore as _impl

BACKEND = _impl.BACKEND

all_pairs_dist = _impl.all_pairs_dist
geodesic_pair_masks = _impl.geodesic_pair_masks
chordless_pair_masks = _impl.chordless_pair_masks
connected_mask_table = _impl.connected_mask_table
tree_g2 = _impl.tree_g2
