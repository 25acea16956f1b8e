"""Polyhedral invariant surfaces in constant-curvature space forms.

Thin wrapper over the compiled extension. When the package is installed the
extension lives alongside this file; during development the environment
variable SPACEFORM_EXT_DIR may point at the build directory holding it.
"""

try:
    from . import _core
except ImportError:  # development tree: extension built out of place
    import importlib as _importlib
    import os as _os
    import sys as _sys

    _ext_dir = _os.environ.get("SPACEFORM_EXT_DIR")
    if not _ext_dir:
        raise
    if _ext_dir not in _sys.path:
        _sys.path.insert(0, _ext_dir)
    _core = _importlib.import_module("_core")

_EXPORTED = [name for name in dir(_core) if not name.startswith("_")]
globals().update({name: getattr(_core, name) for name in _EXPORTED})

__all__ = _EXPORTED
__version__ = "1.0.0"
