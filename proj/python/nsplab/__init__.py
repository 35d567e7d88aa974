"""Composite waves of the 1D isothermal Navier-Stokes-Poisson system."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc
except ImportError:  # test builds put _core next to the package
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "1.0.0"
