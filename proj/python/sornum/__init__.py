"""Table-driven Unum/SORN arithmetic over the projective reals."""

import os
import sys

try:
    from _sornum import *  # noqa: F401,F403
    from _sornum import Runtime, Sorn  # noqa: F401
except ImportError:  # pragma: no cover - dev-tree fallback
    _ext_dir = os.environ.get("SORNUM_EXT_DIR")
    if not _ext_dir:
        raise
    sys.path.insert(0, _ext_dir)
    from _sornum import *  # noqa: F401,F403
    from _sornum import Runtime, Sorn  # noqa: F401

__all__ = [
    "Runtime",
    "Sorn",
    "table_size_bits",
    "lattice_size_from_bits",
    "FloatFormat",
    "binary16",
    "binary32",
    "binary64",
    "round_nearest_even",
    "round_up",
    "round_down",
]
