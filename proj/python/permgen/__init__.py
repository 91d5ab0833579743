"""Random generation in the symmetric group under cycle type restrictions.

Thin package wrapper around the compiled extension. Everything public
lives in ``permgen._core``; see the individual docstrings there.
"""

from permgen._core import *  # noqa: F401,F403
from permgen._core import __version__  # noqa: F401
