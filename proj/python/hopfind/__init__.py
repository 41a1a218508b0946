"""Indicators, filtrations and Chevalley-type predicates of finite-dimensional
Hopf algebras over GF(p)."""

from ._core import *  # noqa: F401,F403
from ._core import Error, ParseError  # noqa: F401

__version__ = "0.1.0"
