"""Verification toolkit for the finite quotients of the Grigorchuk group."""

from _grigq import *  # noqa: F401,F403
from _grigq import __version__  # noqa: F401
