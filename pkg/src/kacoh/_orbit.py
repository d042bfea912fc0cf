"""Kernel selection: compiled orbit closure if built, pure Python otherwise.

Set KACOH_PURE=1 to force the pure kernel even when the extension exists.
"""

from __future__ import annotations

import os

from . import _orbit_py

try:
    from . import _orbitcore
except ImportError:
    _orbitcore = None


def active_kernel():
    """(name, orbit_partition) for the kernel this process will use."""
    if _orbitcore is not None and os.environ.get("KACOH_PURE") != "1":
        return "compiled", _orbitcore.orbit_partition
    return "pure", _orbit_py.orbit_partition


def available_kernels():
    """All usable kernels, for benchmarks and agreement tests."""
    out = {"pure": _orbit_py.orbit_partition}
    if _orbitcore is not None:
        out["compiled"] = _orbitcore.orbit_partition
    return out


def orbit_partition(points, reflections, basis):
    return active_kernel()[1](points, reflections, basis)
