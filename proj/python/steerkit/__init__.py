"""Qubit steering toolkit.

States, spin measurements, two-observable steering functionals and their
bounds, CHSH maxima, linear steering criteria, and one-way key-rate reports.
All numerics live in the compiled extension; this package only re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
