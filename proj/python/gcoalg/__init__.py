"""Exact structure-constant computations for group coalgebras.

The compiled extension carries the whole public surface; this package only
re-exports it so that both the in-tree build (extension next to the package
on PYTHONPATH) and an installed wheel (extension inside the package) work.
"""

try:
    from ._gcoalg import *  # noqa: F401,F403
    from ._gcoalg import __doc__  # noqa: F401
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _gcoalg import *  # noqa: F401,F403
    from _gcoalg import __doc__  # noqa: F401
