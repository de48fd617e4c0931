import pytest

from container import build_container
from di import Container
from settings import Settings


@pytest.fixture(scope="session")
def settings() -> Settings:
    return Settings()  # type: ignore


@pytest.fixture
def container() -> Container:
    """Services wired the way the command line wires them."""
    return build_container()
