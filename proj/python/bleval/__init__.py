"""Tolerance-aware R/P/F evaluation of baseline detection results."""

try:
    # Installed layout: the extension lives inside the package.
    from ._bleval import *  # noqa: F401,F403
    from . import _bleval as _impl
except ImportError:
    # In-tree builds put the extension next to the package on sys.path.
    from _bleval import *  # noqa: F401,F403
    import _bleval as _impl

__version__ = _impl.__version__
