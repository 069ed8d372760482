"""Graph-parameter engine for frustration graphs of Pauli strings."""

from ._hbar import *  # noqa: F401,F403
from ._hbar import __version__  # noqa: F401
