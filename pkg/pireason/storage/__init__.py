"""Storage module for theory and scenario files."""

from .file_store import FileStore
from .schemas import ActionEntry, Scenario, ScenarioData

__all__ = ["FileStore", "ActionEntry", "Scenario", "ScenarioData"]
