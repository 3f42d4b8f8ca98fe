"""
File loading for pireason.

Features:
- Theory files: one formula per line, optional `belief:` prefix
- Scenario files: `belief:`, `goal:` and `action: label | pre | post` lines
- JSON scenarios (`.json` suffix) via ScenarioData.from_dict
- `#` starts a comment anywhere on a line; blank lines are ignored
"""

import json
import logging
import re
from pathlib import Path
from typing import Iterator, Optional, Tuple, Union

from ..errors import FormulaSyntaxError, ScenarioFormatError
from ..services.formula import Theory
from ..services.parser import parse
from .schemas import ActionEntry, Scenario, ScenarioData

logger = logging.getLogger(__name__)

LABEL_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*")

PathLike = Union[str, Path]


class FileStore:
    """
    Reads theory and scenario files.

    Relative paths are resolved against `base_dir` when one is given.
    """

    def __init__(self, base_dir: Optional[Path] = None):
        self.base_dir = base_dir

    def _resolve(self, path: PathLike) -> Path:
        path = Path(path)
        if not path.is_absolute() and self.base_dir is not None and not path.exists():
            candidate = self.base_dir / path
            if candidate.exists():
                return candidate
        return path

    def _read(self, path: Path) -> str:
        if not path.is_file():
            logger.error(f"File not found: {path}")
            raise FileNotFoundError(f"File not found: {path}")
        return path.read_text(encoding="utf-8")

    @staticmethod
    def _lines(text: str) -> Iterator[Tuple[int, str]]:
        """Numbered non-empty lines with comments removed."""
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield number, line

    @staticmethod
    def _split_key(line: str) -> Tuple[Optional[str], str]:
        head, sep, rest = line.partition(":")
        if sep and head.strip() in ("belief", "goal", "action"):
            return head.strip(), rest.strip()
        return None, line

    # ==================== THEORIES ====================

    def load_theory(self, path: PathLike) -> Theory:
        path = self._resolve(path)
        formulas = []
        for number, line in self._lines(self._read(path)):
            key, body = self._split_key(line)
            if key not in (None, "belief"):
                raise ScenarioFormatError(f"Unexpected '{key}:' line in a theory file", path, number)
            formulas.append(self._parse(body, path, number))
        logger.info(f"Loaded theory with {len(formulas)} formula(s) from {path}")
        return Theory(tuple(formulas))

    # ==================== SCENARIOS ====================

    def load_scenario(self, path: PathLike) -> Scenario:
        path = self._resolve(path)
        text = self._read(path)
        if path.suffix.lower() == ".json":
            data = self._scenario_from_json(text, path)
            try:
                scenario = data.to_scenario()
            except FormulaSyntaxError as e:
                raise ScenarioFormatError(str(e), path) from e
            except ScenarioFormatError as e:
                raise ScenarioFormatError(str(e), path) from e
        else:
            scenario = self._scenario_from_lines(text, path)

        if not scenario.actions:
            logger.warning(f"Scenario {path} lists no actions")
        logger.info(
            f"Loaded scenario from {path}: {len(scenario.belief)} belief(s), "
            f"{len(scenario.actions)} action(s)"
        )
        return scenario

    def _scenario_from_json(self, text: str, path: Path) -> ScenarioData:
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            logger.error(f"JSON parse error in {path}: {e}")
            raise ScenarioFormatError(f"Invalid JSON: {e.msg}", path, e.lineno) from e
        if not isinstance(raw, dict):
            raise ScenarioFormatError("Expected a JSON object", path)
        try:
            return ScenarioData.from_dict(raw)
        except (KeyError, TypeError) as e:
            raise ScenarioFormatError(f"Missing or malformed field: {e}", path) from e

    def _scenario_from_lines(self, text: str, path: Path) -> Scenario:
        data = ScenarioData()
        goal_line = None
        for number, line in self._lines(text):
            key, body = self._split_key(line)
            if key == "belief":
                self._parse(body, path, number)
                data.beliefs.append(body)
            elif key == "goal":
                if goal_line is not None:
                    raise ScenarioFormatError(f"Second goal (first on line {goal_line})", path, number)
                self._parse(body, path, number)
                data.goal = body
                goal_line = number
            elif key == "action":
                data.actions.append(self._action(body, path, number))
            else:
                raise ScenarioFormatError(
                    "Expected 'belief:', 'goal:' or 'action:'", path, number
                )
        if data.goal is None:
            raise ScenarioFormatError("Scenario has no goal", path)
        return data.to_scenario()

    def _action(self, body: str, path: Path, number: int) -> ActionEntry:
        parts = [p.strip() for p in body.split("|")]
        # '|' is also disjunction: a disjunctive precondition needs parentheses
        if len(parts) < 3:
            raise ScenarioFormatError("Expected 'action: label | pre | post'", path, number)
        label = parts[0]
        if not LABEL_PATTERN.fullmatch(label):
            raise ScenarioFormatError(f"Invalid action label {label!r}", path, number)
        return self._split_action_formulas(label, parts[1:], path, number)

    def _split_action_formulas(self, label: str, rest, path: Path, number: int) -> ActionEntry:
        """First split of `pre | post` where both sides parse."""
        for cut in range(1, len(rest)):
            pre = " | ".join(rest[:cut])
            post = " | ".join(rest[cut:])
            try:
                parse(pre)
                parse(post)
            except FormulaSyntaxError:
                continue
            return ActionEntry(label, pre, post)
        raise ScenarioFormatError(f"Cannot read pre and post formulas of action {label!r}", path, number)

    @staticmethod
    def _parse(text: str, path: Path, number: int):
        try:
            return parse(text)
        except FormulaSyntaxError as e:
            raise ScenarioFormatError(str(e), path, number) from e
