"""
Error types raised by the pilift engine.

Input and usage problems derive from ``ValueError`` so callers can treat them
as bad requests. ``EngineAnomaly`` is different: it means an internal
consistency check failed and carries a witness describing what was observed.
"""

from typing import Any, Dict, Optional


class PiliftError(Exception):
    """Base class for every error raised by the engine."""


class InputError(PiliftError, ValueError):
    """A caller supplied malformed or inconsistent input."""


class PermutationSyntaxError(InputError):
    """Cycle notation could not be parsed."""


class OrderCapExceeded(InputError):
    """Closure enumeration produced more elements than the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"group order exceeds cap {cap}")
        self.cap = cap


class GroupConstructionError(InputError):
    """A construction (semidirect product, quotient, builtin) was inconsistent."""


class NotSubgroupError(InputError):
    """A group was expected to be contained in another."""


class NotNormalError(InputError):
    """A subgroup was expected to be normal."""


class NotPiSeparableError(InputError):
    """The group has a chief factor that is neither a pi- nor a pi'-group."""


class GroupMismatchError(InputError):
    """Two objects live on different groups."""


class NotACharacterError(InputError):
    """A class function was expected to be an irreducible (partial) character."""


class CharacterTableError(PiliftError):
    """Character table construction failed for every prime tried."""


class EngineAnomaly(PiliftError):
    """
    An internal consistency check failed.

    Attributes:
        check: short name of the failed check
        witness: JSON-friendly description of what was observed
    """

    def __init__(self, check: str, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(f"{check}: {message}")
        self.check = check
        self.witness: Dict[str, Any] = dict(witness or {})
