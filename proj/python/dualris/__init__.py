"""Secrecy metrics for a cooperative dual-RIS NOMA wiretap link."""

from ._dualris import *  # noqa: F401,F403
from ._dualris import ConfigError, DomainError, NumericError  # noqa: F401

__version__ = "0.1.0"
