"""Step-function algebra, K-functionals and the nonlinear non-compactness
operators on the (Linf, L1) couple, backed by the C++ core."""

try:
    from ._lipcex import *  # noqa: F401,F403  (installed layout)
    from . import _lipcex as _impl
except ImportError:  # pragma: no cover - in-tree test layout
    from _lipcex import *  # noqa: F401,F403
    import _lipcex as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
