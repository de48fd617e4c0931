import logging
from typing import Any, TypeVar, cast

logger = logging.getLogger("di")

T = TypeVar("T")


class FutureService:
    """
    Placeholder for a service that is not constructed yet.

    Services receive their dependencies as ``FutureService(cls)`` and :meth:`Container.spinup`
    replaces every placeholder attribute by the registered instance of ``cls``.

    Attributes:
        signature (type): Class of the awaited service.
    """

    def __init__(self, signature: type) -> None:
        self.signature = signature

    def __repr__(self) -> str:
        return f"FutureService({self.signature.__name__})"


class Container:
    """
    Registry of service instances keyed by their class.

    Examples:
        >>> container = Container()
        >>> container.add(FreeAlgebraService, FreeAlgebraService())
        >>> container.add(RepresentationService, RepresentationService(FutureService(FreeAlgebraService)))
        >>> container.spinup()
        >>> container.get(RepresentationService).freealg
        <FreeAlgebraService ...>
    """

    def __init__(self) -> None:
        self._services: dict[type, Any] = {}

    def add(self, signature: type[T], instance: T) -> None:
        logger.debug(f"Instance for {signature.__name__} added as {instance}")
        self._services[signature] = instance

    def get(self, signature: type[T]) -> T:
        """
        Raises:
            LookupError: If nothing is registered under the signature.
        """
        if signature not in self._services:
            raise LookupError(f"No service {signature.__name__} registered")
        return cast(T, self._services[signature])

    def spinup(self) -> None:
        """
        Resolves FutureService placeholders held in instance attributes.

        Raises:
            LookupError: If a placeholder names an unregistered service.
        """
        for signature, instance in self._services.items():
            for name, value in vars(instance).items():
                if isinstance(value, FutureService):
                    setattr(instance, name, self.get(value.signature))
            logger.debug(f"Service {signature.__name__} is {instance}")
