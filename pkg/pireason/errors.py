"""
Exception hierarchy for pireason.

Every error raised on purpose by the package derives from PiReasonError.
Concrete errors also subclass the closest builtin so callers that only
know about ValueError or RuntimeError keep working.
"""

from pathlib import Path
from typing import Optional


class PiReasonError(Exception):
    """Base class for all pireason errors."""


class FormulaSyntaxError(PiReasonError, ValueError):
    """Malformed or empty formula text."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class InconsistentLiteralsError(PiReasonError, ValueError):
    """A literal set contains both polarities of an atom."""

    def __init__(self, atoms):
        self.atoms = tuple(sorted(atoms))
        super().__init__(
            f"Inconsistent literal set: both polarities of {', '.join(self.atoms)}"
        )

    def __reduce__(self):
        return (type(self), (self.atoms,))


class AssignmentError(PiReasonError, ValueError):
    """An assignment does not cover the atoms it is asked about."""


class UniverseTooLargeError(PiReasonError):
    """The atom universe exceeds the configured truth-table limit."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(
            f"Universe of {size} atoms exceeds the limit of {limit} "
            f"(raise PIREASON_MAX_UNIVERSE to allow it)"
        )

    def __reduce__(self):
        return (type(self), (self.size, self.limit))


class InvalidClauseError(PiReasonError, ValueError):
    """A clause is empty or valid (holds complementary literals)."""


class EmptyVariableSetError(PiReasonError, ValueError):
    """An operation needs a non-empty set of atoms."""


class RuleShapeError(PiReasonError, ValueError):
    """A rule instance lacks the slots its rule schema needs."""


class InstanceGenerationError(PiReasonError, RuntimeError):
    """The random generator could not produce enough nontrivial instances."""


class Table2ViolationError(PiReasonError, RuntimeError):
    """A rule expected to hold produced a counterexample."""

    def __init__(self, rule: str, kind: str, instance):
        self.rule = rule
        self.kind = kind
        self.instance = instance
        super().__init__(
            f"Rule {rule} under {kind} partial entailment is expected to hold "
            f"but failed on {instance}"
        )

    def __reduce__(self):
        return (type(self), (self.rule, self.kind, self.instance))


class DuplicateActionError(PiReasonError, ValueError):
    """Two candidate actions share a label."""


class ScenarioFormatError(PiReasonError, ValueError):
    """A theory or scenario file line could not be understood."""

    def __init__(self, message: str, path: Optional[Path] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(f"{where}{message}")
