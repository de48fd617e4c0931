import logging

from di import Container, FutureService
from service.codim import CodimensionService
from service.freealg import FreeAlgebraService
from service.idcheck import IdentityService
from service.reptheory import RepresentationService
from service.verification import VerificationService

logger = logging.getLogger("container")


def build_container(*, max_dim: int | None = None, threads: int | None = None, seed: int | None = None) -> Container:
    """Registers and wires every service. ``None`` falls back to the settings."""
    container = Container()
    container.add(FreeAlgebraService, FreeAlgebraService())
    container.add(IdentityService, IdentityService(max_dim=max_dim))
    container.add(RepresentationService, RepresentationService(FutureService(FreeAlgebraService)))  # type: ignore[arg-type]
    container.add(CodimensionService, CodimensionService(FutureService(FreeAlgebraService), FutureService(RepresentationService)))  # type: ignore[arg-type]
    container.add(VerificationService, VerificationService(threads=threads, seed=seed))
    container.spinup()
    logger.debug("Services wired")
    return container
