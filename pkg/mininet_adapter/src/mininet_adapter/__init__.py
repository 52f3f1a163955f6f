"""Deploy generated evaluation scenarios into the Mininet emulator."""

from .deploy import MAX_NODES, NetworkHandle, build_network, teardown
from .errors import (
    AdapterError,
    DeploymentError,
    EmulatorUnavailableError,
    ScenarioFormatError,
    ScenarioInvalidError,
)
from .loader import LoadedScenario, load_scenario, parse_scenario
from .verify import (
    BANDWIDTH_TOLERANCE,
    DeploymentReport,
    LinkProbe,
    verify_deployment,
)

__version__ = "0.1.0"

__all__ = [
    "AdapterError",
    "BANDWIDTH_TOLERANCE",
    "DeploymentError",
    "DeploymentReport",
    "EmulatorUnavailableError",
    "LinkProbe",
    "LoadedScenario",
    "MAX_NODES",
    "NetworkHandle",
    "ScenarioFormatError",
    "ScenarioInvalidError",
    "build_network",
    "load_scenario",
    "parse_scenario",
    "teardown",
    "verify_deployment",
]
