"""Error types shared across the toolkit.

Each class carries the process exit code the command line front end maps
it to: 2 configuration, 3 transmission zero, 4 stabilization failure,
5 non-finite numerics, 1 anything else.
"""


class RegulatorError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class ConfigError(RegulatorError):
    """Invalid configuration value or malformed config file."""

    exit_code = 2


class SynthesisError(RegulatorError):
    """Regulator synthesis failed structurally."""


class InvariantZeroError(SynthesisError):
    """A generator frequency coincides with a transmission zero of the plant."""

    exit_code = 3


class HurwitzError(SynthesisError):
    """No stabilizing output-injection gain (candidate rejected or search exhausted)."""

    exit_code = 4


class NumericError(RegulatorError):
    """A non-finite value (NaN/Inf) appeared where a finite one is required."""

    exit_code = 5
