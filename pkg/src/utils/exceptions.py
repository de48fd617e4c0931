import logging
from collections.abc import Awaitable, Callable
from dataclasses import dataclass

from rich.console import Console

from service.core.entity import ErrorEntity

from .output import Output

logger = logging.getLogger("utils.exceptions")


@dataclass
class ExceptionConfiguration:
    """
    How an exception leaves the command line.

    Attributes:
        exception (type[Exception]): The type of exception to be handled.
        exit_code (int): Process exit code returned when the exception is raised.
        app_code (str): The application-specific code reported with the exception.
    """
    exception: type[Exception]
    exit_code: int
    app_code: str


class ExceptionHandler:
    """
    Runs a command and turns mapped exceptions into an error report and an exit code.

    Example:
        handler = ExceptionHandler([ExceptionConfiguration(SpecParseError, 2, "SPEC_PARSE")])
        await handler.dispatch(lambda: command(...), output)
    """

    def __init__(self, exception_map: list[ExceptionConfiguration]):
        self._exception_map = exception_map
        self._stderr = Console(stderr=True, markup=False, highlight=False)

    def configuration(self, exc: BaseException) -> ExceptionConfiguration:
        return next(configuration for configuration in self._exception_map if isinstance(exc, configuration.exception))

    async def dispatch(self, call_next: Callable[[], Awaitable[int]], output: Output) -> int:
        """Awaits the command and returns its exit code, or the mapped code of the exception it raised."""
        excs = tuple(configuration.exception for configuration in self._exception_map)
        try:
            return await call_next()
        except excs as e:
            logger.exception(e)
            configuration = self.configuration(e)
            error = ErrorEntity(code=configuration.app_code, message=str(e))
            if output.fmt == "json":
                output.emit(error)
            else:
                self._stderr.print(f"{error.code}: {error.message}")
            return configuration.exit_code
