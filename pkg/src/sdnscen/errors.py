"""Exception hierarchy for scenario generation and analysis.

Every domain failure derives from ScenarioError so callers (notably the
CLI) can map the whole family onto a single exit code.
"""


class ScenarioError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidSizeError(ScenarioError):
    """Node count below the minimum viable size for a topology class."""


class InfeasibleError(ScenarioError):
    """Requested edge count exceeds the complete-graph maximum."""


class RangeError(ScenarioError):
    """A min/max attribute or requirement range is malformed."""


class StructuralError(ScenarioError):
    """An edge or flow references a node outside the topology."""


class EndpointError(ScenarioError):
    """Flows were requested on a topology with fewer than two nodes."""


class InvalidPairError(ScenarioError):
    """A path query named an invalid node pair (u = v or out of range)."""


class GuardError(ScenarioError):
    """Exact path enumeration refused without a length cap or force flag."""


class ParseError(ScenarioError):
    """A scenario document is not syntactically valid."""


class ValidationError(ScenarioError):
    """A scenario document is well-formed but violates an invariant."""


class VersionError(ValidationError):
    """A scenario document declares an unsupported schema version."""


class EmulatorSizeError(ScenarioError):
    """Scenario too large for single-machine emulator deployment."""
