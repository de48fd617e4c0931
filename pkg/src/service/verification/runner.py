import logging
import time

from service.core.entity import ClaimEntity
from service.core.errors import EngineError, UnsupportedError

from .claims import CLAIMS_BY_NAME

logger = logging.getLogger("service.verification.runner")


def run_claim(name: str, seed: int) -> ClaimEntity:
    """Checks one claim. Engine errors count as a failed claim, anything else propagates."""
    if name not in CLAIMS_BY_NAME:
        raise UnsupportedError(f"unknown claim {name}")
    started = time.perf_counter()
    try:
        detail = CLAIMS_BY_NAME[name].check(seed)
        verified = True
    except EngineError as exc:
        detail = f"{exc.__class__.__name__}: {exc}"
        verified = False
    seconds = time.perf_counter() - started
    logger.info(f"{name}: {'VERIFIED' if verified else 'FAILED'} in {seconds:.1f}s")
    return ClaimEntity(name=name, verified=verified, detail=detail, seconds=seconds)
