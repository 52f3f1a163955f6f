class AdapterError(Exception):
    """Base class for adapter failures."""


class ScenarioFormatError(AdapterError):
    """Scenario file is not syntactically valid JSON."""


class ScenarioInvalidError(AdapterError):
    """Scenario document violates an invariant of schema 1.0."""


class EmulatorUnavailableError(AdapterError):
    """Mininet (or a required probe tool) is not present on this host."""


class DeploymentError(AdapterError):
    """The emulator refused or failed to realize the network."""
