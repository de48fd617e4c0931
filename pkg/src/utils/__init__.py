from .exceptions import ExceptionConfiguration, ExceptionHandler
from .output import Output, OutputFormat

__all__ = ["ExceptionConfiguration", "ExceptionHandler", "Output", "OutputFormat"]
