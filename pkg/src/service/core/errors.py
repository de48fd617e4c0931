class EngineError(Exception):
    """Base class of every error raised by the engine."""


class SizeGuardError(EngineError):
    """A computation would exceed a configured size guard."""


class DimensionMismatchError(EngineError):
    """Operands live in different spaces (Grassmann dims, algebras, degrees)."""


class SpecParseError(EngineError):
    """An algebra spec string could not be parsed."""


class PolyParseError(EngineError):
    """A polynomial literal could not be parsed."""


class ConstructionError(EngineError):
    """An algebra failed validation while being constructed."""


class CapExceededError(EngineError):
    """No Lie nilpotency index was found below the requested cap.

    This never means the algebra is not Lie nilpotent, only that the search stopped.
    """


class UnsupportedError(EngineError):
    """The requested combination of arguments is outside what the engine implements."""


class InconsistentSystemError(EngineError):
    """A linear system has no solution."""


class VerificationError(EngineError):
    """An internal cross-check failed (fit verification, witness re-evaluation)."""
