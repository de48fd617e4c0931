from .entity import ClaimEntity, ErrorEntity, SuiteReport
from .errors import (
    CapExceededError,
    ConstructionError,
    DimensionMismatchError,
    EngineError,
    InconsistentSystemError,
    PolyParseError,
    SizeGuardError,
    SpecParseError,
    UnsupportedError,
    VerificationError,
)

__all__ = [
    "ClaimEntity",
    "ErrorEntity",
    "SuiteReport",
    "EngineError",
    "SizeGuardError",
    "DimensionMismatchError",
    "SpecParseError",
    "PolyParseError",
    "ConstructionError",
    "CapExceededError",
    "UnsupportedError",
    "InconsistentSystemError",
    "VerificationError",
]
